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

#include "mimolab/cli/ini.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace
{
    bool is_name_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    }

    std::size_t first_non_space(std::string_view s, std::size_t from = 0)
    {
        while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from])))
            ++from;
        return from;
    }

    std::string_view trim_right(std::string_view s)
    {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    std::string_view strip_inline_comment(std::string_view s)
    {
        for (std::size_t i = 1; i < s.size(); ++i)
            if ((s[i] == '#' || s[i] == ';') && std::isspace(static_cast<unsigned char>(s[i - 1])))
                return s.substr(0, i);
        return s;
    }
}

mimolab::cli::ConfigParseError::ConfigParseError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column)
{
}

std::vector<mimolab::cli::IniSection> mimolab::cli::parse_ini(std::string_view text)
{
    std::vector<IniSection> sections;
    sections.push_back({"", 0, {}});
    std::set<std::string> seen_sections;
    std::set<std::string> seen_keys;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        const std::size_t start = first_non_space(line);
        if (start == line.size() || line[start] == '#' || line[start] == ';')
        {
            if (eol == text.size())
                break;
            continue;
        }
        line = trim_right(strip_inline_comment(line));

        if (line[start] == '[')
        {
            const std::size_t close = line.find(']', start);
            if (close == std::string_view::npos)
                throw ConfigParseError(line_no, line.size() + 1, "missing ']' in section header");
            if (close + 1 != line.size())
                throw ConfigParseError(line_no, close + 2 + first_non_space(line.substr(close + 1)), "unexpected text after section header");
            const std::string_view name = line.substr(start + 1, close - start - 1);
            if (name.empty())
                throw ConfigParseError(line_no, start + 2, "empty section name");
            for (std::size_t i = 0; i < name.size(); ++i)
                if (!is_name_char(name[i]))
                    throw ConfigParseError(line_no, start + 2 + i, "invalid character in section name");
            if (!seen_sections.insert(std::string(name)).second)
                throw ConfigParseError(line_no, start + 1, "duplicate section [" + std::string(name) + "]");
            sections.push_back({std::string(name), line_no, {}});
            seen_keys.clear();
        }
        else
        {
            const std::size_t eq = line.find('=', start);
            if (eq == std::string_view::npos)
                throw ConfigParseError(line_no, line.size() + 1, "expected 'key = value'");
            const std::string_view key = trim_right(line.substr(start, eq - start));
            if (key.empty())
                throw ConfigParseError(line_no, start + 1, "missing key before '='");
            for (std::size_t i = 0; i < key.size(); ++i)
                if (!is_name_char(key[i]))
                    throw ConfigParseError(line_no, start + 1 + i, "invalid character in key");
            const std::size_t vstart = first_non_space(line, eq + 1);
            const std::string_view value = line.substr(std::min(vstart, line.size()));
            if (value.empty())
                throw ConfigParseError(line_no, eq + 2, "missing value for key '" + std::string(key) + "'");
            if (!seen_keys.insert(std::string(key)).second)
                throw ConfigParseError(line_no, start + 1, "duplicate key '" + std::string(key) + "'");
            sections.back().entries.push_back({std::string(key), std::string(value), line_no});
        }
        if (eol == text.size())
            break;
    }
    return sections;
}

std::vector<mimolab::cli::IniSection> mimolab::cli::load_ini(const std::filesystem::path &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("Cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_ini(ss.str());
}
