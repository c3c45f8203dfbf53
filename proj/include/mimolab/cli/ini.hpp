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

#ifndef mimolab_cli_ini_H
#define mimolab_cli_ini_H

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mimolab::cli
{
    class ConfigParseError : public std::runtime_error
    {
    public:
        ConfigParseError(std::size_t line, std::size_t column, const std::string &message);

        std::size_t line() const { return line_; }
        std::size_t column() const { return column_; }

    private:
        std::size_t line_;
        std::size_t column_;
    };

    struct IniEntry
    {
        std::string key;
        std::string value;
        std::size_t line = 0;
    };

    struct IniSection
    {
        std::string name; // Empty for keys before the first section header
        std::size_t line = 0;
        std::vector<IniEntry> entries;
    };

    // Flat INI: "[section]" headers, "key = value" lines, whole-line comments starting with '#' or ';'
    // and inline comments introduced by whitespace followed by '#' or ';'. Duplicate sections or
    // duplicate keys within a section are parse errors.
    std::vector<IniSection> parse_ini(std::string_view text);

    std::vector<IniSection> load_ini(const std::filesystem::path &path);
}

#endif
