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

#include "mimolab/cli/app.hpp"
#include "mimolab/cli/experiments.hpp"
#include "mimolab/cli/ini.hpp"

#include "mimolab/io.hpp"
#include "mimolab/random.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <stdexcept>

namespace
{
    std::uint64_t parse_seed(const std::string &field, const std::string &text)
    {
        try
        {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(text, &used, 0);
            if (used != text.size() || text.front() == '-')
                throw std::invalid_argument("trailing characters");
            return v;
        }
        catch (const std::exception &)
        {
            throw mimolab::cli::ValidationError(field, "expected an unsigned 64-bit integer, got '" + text + "'");
        }
    }

    std::string normalize_key(std::string key)
    {
        for (auto &c : key)
            if (c == '-')
                c = '_';
        return key;
    }

    std::string manifest_json(const mimolab::cli::ExperimentConfig &config, const mimolab::cli::Parameters &params,
                              const nlohmann::json &summary)
    {
        nlohmann::json manifest = {
            {"artifact", "mimolab"},
            {"version", MIMOLAB_VERSION},
            {"experiment", config.experiment},
            {"seed", config.seed},
            {"rng_algorithm", std::string(mimolab::Rng::algorithm)},
            {"parameters", params.values()},
            {"output_file", config.output_path->filename().string()},
            {"summary", summary},
        };
        return manifest.dump(2) + "\n";
    }

    bool all_finite(const nlohmann::json &j)
    {
        if (j.is_number_float())
            return std::isfinite(j.get<double>());
        if (j.is_structured())
            for (const auto &v : j)
                if (!all_finite(v))
                    return false;
        return true;
    }
}

mimolab::cli::ExperimentConfig mimolab::cli::load_config(const std::filesystem::path &path)
{
    const auto sections = load_ini(path);

    ExperimentConfig config;
    for (const auto &section : sections)
        if (section.name.empty() || section.name == "run")
            for (const auto &e : section.entries)
            {
                if (e.key == "experiment")
                    config.experiment = e.value;
                else if (e.key == "seed")
                    config.seed = parse_seed("seed", e.value);
                else if (e.key == "output")
                    config.output_path = e.value;
                else
                    throw ValidationError(e.key, "unknown key in [run] (line " + std::to_string(e.line) + ")");
            }

    for (const auto &section : sections)
    {
        if (section.name.empty() || section.name == "run")
            continue;
        if (config.experiment.empty())
            config.experiment = section.name;
        if (section.name != config.experiment)
            throw ValidationError("[" + section.name + "]", "section does not match experiment '" + config.experiment +
                                                                "' (line " + std::to_string(section.line) + ")");
        for (const auto &e : section.entries)
            config.parameters[e.key] = e.value;
    }
    return config;
}

int mimolab::cli::run(const ExperimentConfig &config, std::ostream &out, std::ostream &err)
{
    const ExperimentInfo *info = find_experiment(config.experiment);
    if (!info)
    {
        err << "error: experiment: unknown experiment '" << config.experiment << "'\n\n"
            << list_experiments();
        return exit_validation_error;
    }

    try
    {
        const Parameters params(*info, config.parameters);
        const ExperimentOutput result = execute(*info, params, config.seed);
        if (!all_finite(result.summary))
        {
            err << "error: numeric failure: non-finite result\n";
            return exit_runtime_error;
        }

        if (!config.output_path)
        {
            out << result.content;
            return exit_ok;
        }

        write_file_atomic(*config.output_path, result.content);
        auto manifest_path = *config.output_path;
        manifest_path += ".manifest.json";
        write_file_atomic(manifest_path, manifest_json(config, params, result.summary));
        out << result.console;
        return exit_ok;
    }
    catch (const ValidationError &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_validation_error;
    }
    catch (const std::invalid_argument &e)
    {
        err << "error: invalid value: " << e.what() << "\n";
        return exit_validation_error;
    }
    catch (const std::exception &e)
    {
        err << "error: numeric failure: " << e.what() << "\n";
        return exit_runtime_error;
    }
}

int mimolab::cli::main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"mimolab: massive MIMO numerical laboratory (sub-6 GHz and mmWave)", "mimolab_run"};
    app.allow_extras();

    std::string experiment, config_path, output, seed;
    std::vector<std::string> sets;
    bool list = false;
    app.add_option("--experiment", experiment, "Experiment name, also accepted as the first positional argument");
    app.add_option("--config", config_path, "INI config file");
    app.add_option("--output", output, "Result file; a <output>.manifest.json is written next to it");
    app.add_option("--seed", seed, "Random seed (default 42)");
    app.add_option("--set", sets, "Parameter override key=value (repeatable)");
    app.add_flag("--list", list, "List experiments and their parameters");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help() << "\n" << list_experiments();
        return exit_ok;
    }
    catch (const CLI::ParseError &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_parse_error;
    }

    if (list || (argc <= 1))
    {
        out << app.help() << "\n" << list_experiments();
        return exit_ok;
    }

    ExperimentConfig config;
    try
    {
        // Remaining "--key value" or "--key=value" pairs are parameter overrides; a bare word is the experiment
        std::map<std::string, std::string> overrides;
        const auto extras = app.remaining();
        for (std::size_t i = 0; i < extras.size(); ++i)
        {
            const std::string &tok = extras[i];
            if (tok.rfind("--", 0) != 0 || tok.size() <= 2)
            {
                if (!experiment.empty())
                    throw ValidationError(tok, "unexpected argument");
                experiment = tok;
                continue;
            }
            const auto eq = tok.find('=');
            if (eq != std::string::npos)
                overrides[normalize_key(tok.substr(2, eq - 2))] = tok.substr(eq + 1);
            else
            {
                if (i + 1 >= extras.size())
                    throw ValidationError(tok, "missing value");
                overrides[normalize_key(tok.substr(2))] = extras[++i];
            }
        }

        if (!config_path.empty())
            config = load_config(config_path);
        if (!experiment.empty())
            config.experiment = experiment;
        if (config.experiment.empty())
            throw ValidationError("experiment", "no experiment given");
        if (!seed.empty())
            config.seed = parse_seed("--seed", seed);
        if (!output.empty())
            config.output_path = output;

        for (const auto &s : sets)
        {
            const auto eq = s.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ValidationError("--set", "expected key=value, got '" + s + "'");
            config.parameters[normalize_key(s.substr(0, eq))] = s.substr(eq + 1);
        }

        for (const auto &[key, value] : overrides)
            config.parameters[key] = value;
    }
    catch (const ConfigParseError &e)
    {
        err << "error: " << config_path << ":" << e.what() << "\n";
        return exit_parse_error;
    }
    catch (const ValidationError &e)
    {
        err << "error: " << e.what() << "\n";
        if (e.field() == "experiment")
            err << "\n" << list_experiments();
        return exit_validation_error;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_parse_error;
    }

    return run(config, out, err);
}
