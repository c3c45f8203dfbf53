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

#ifndef mimolab_cli_app_H
#define mimolab_cli_app_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mimolab::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_parse_error = 2;
    inline constexpr int exit_validation_error = 3;
    inline constexpr int exit_runtime_error = 4;

    struct ExperimentConfig
    {
        std::string experiment;
        std::map<std::string, std::string> parameters; // Overrides on top of the experiment defaults
        std::uint64_t seed = 42;
        std::optional<std::filesystem::path> output_path;
    };

    // Reads a config file: an optional [run] section (experiment, seed, output) and one section named
    // after the experiment holding its parameters. Keys before the first header belong to [run].
    // Throws ConfigParseError for syntax errors and ValidationError for unknown sections or keys.
    ExperimentConfig load_config(const std::filesystem::path &path);

    // Runs one experiment. Without an output path the result is written to `out`; otherwise the result
    // file and "<output>.manifest.json" are written atomically and a summary goes to `out`.
    int run(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

    // Command-line entry point
    int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}

#endif
