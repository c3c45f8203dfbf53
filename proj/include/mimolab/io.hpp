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

#ifndef mimolab_io_H
#define mimolab_io_H

#include <filesystem>
#include <string>
#include <string_view>

namespace mimolab
{
    // Shortest decimal representation that parses back to the same double
    std::string format_double(double value);

    // Writes to a temporary file next to `path`, then renames it into place
    void write_file_atomic(const std::filesystem::path &path, std::string_view content);
}

#endif
