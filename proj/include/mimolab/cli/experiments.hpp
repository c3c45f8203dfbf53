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

#ifndef mimolab_cli_experiments_H
#define mimolab_cli_experiments_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mimolab::cli
{
    // A configuration value that is missing, unknown or malformed
    class ValidationError : public std::runtime_error
    {
    public:
        ValidationError(std::string field, const std::string &message)
            : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

        const std::string &field() const { return field_; }

    private:
        std::string field_;
    };

    struct ParamSpec
    {
        std::string key;
        std::string default_value;
        std::string description;
    };

    struct ExperimentInfo
    {
        std::string name;
        std::string description;
        std::string output_format; // "csv" or "json"
        std::vector<ParamSpec> params;
        std::string dynamic_prefix; // Keys with this prefix are accepted in addition to params
    };

    const std::vector<ExperimentInfo> &experiments();
    const ExperimentInfo *find_experiment(const std::string &name);

    // Every experiment with its parameters and defaults
    std::string list_experiments();

    // Resolved parameter set with typed accessors; malformed values raise ValidationError
    class Parameters
    {
    public:
        Parameters(const ExperimentInfo &info, const std::map<std::string, std::string> &overrides);

        const std::map<std::string, std::string> &values() const { return values_; }

        std::string text(const std::string &key) const;
        double real(const std::string &key) const;
        double positive(const std::string &key) const;
        std::uint64_t count(const std::string &key) const; // Integer >= 1
        bool flag(const std::string &key) const;
        std::string choice(const std::string &key, const std::vector<std::string> &allowed) const;
        std::vector<double> real_list(const std::string &key) const;
        std::vector<std::uint64_t> count_list(const std::string &key) const;

        // Keys matching the experiment's dynamic prefix, in key order
        std::vector<std::pair<std::string, std::string>> dynamic_entries() const;

    private:
        const ExperimentInfo *info_;
        std::map<std::string, std::string> values_;
    };

    struct ExperimentOutput
    {
        std::string content;   // Result file body (CSV or JSON)
        nlohmann::json summary; // Key numbers, echoed in the manifest
        std::string console;   // Human-readable summary
    };

    ExperimentOutput execute(const ExperimentInfo &info, const Parameters &params, std::uint64_t seed);
}

#endif
