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

#ifndef mimolab_random_H
#define mimolab_random_H

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace mimolab
{
    // Portable seeded generator. The engine is std::mt19937_64, whose output sequence is fixed by
    // the C++ standard; the uniform and Gaussian transforms below are written out here instead of
    // using <random> distributions, which are implementation defined.
    //
    //   uniform()        = (engine() >> 11) * 2^-53                      in [0, 1)
    //   complex_normal() = sqrt(-ln(1 - u1)) * exp(j 2 pi u2)            CN(0, 1), E|z|^2 = 1
    class Rng
    {
    public:
        static constexpr std::string_view algorithm = "mt19937_64/u53/boxmuller";

        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        double uniform();
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
        std::complex<double> complex_normal();

    private:
        std::mt19937_64 engine_;
    };

    std::uint64_t splitmix64(std::uint64_t x);

    // Seed of the index-th independent stream derived from a parent seed.
    std::uint64_t child_seed(std::uint64_t parent_seed, std::uint64_t index);
}

#endif
