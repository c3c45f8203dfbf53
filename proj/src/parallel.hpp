// SPDX-License-Identifier: Apache-2.0
//
// mimolab: numerical laboratory for sub-6 GHz and mmWave massive MIMO
// Copyright (C) 2026 The mimolab contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef mimolab_parallel_H
#define mimolab_parallel_H

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mimolab::detail
{
    // Runs body(i) for i in [0, n) on up to hardware_concurrency threads. Each index is handled exactly
    // once, so callers that write only to slot i get results independent of the thread count.
    template <typename Body>
    void parallel_for(std::size_t n, Body &&body)
    {
        const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                body(i);
            return;
        }

        std::exception_ptr error;
        std::mutex error_mutex;
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back([&, w]
                                  {
                                      try
                                      {
                                          for (std::size_t i = w; i < n; i += workers)
                                              body(i);
                                      }
                                      catch (...)
                                      {
                                          std::lock_guard lock(error_mutex);
                                          if (!error)
                                              error = std::current_exception();
                                      } });
        }
        if (error)
            std::rethrow_exception(error);
    }
}

#endif
