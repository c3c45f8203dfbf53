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

#include "catch_amalgamated.hpp"

#include "mimolab/cli/app.hpp"
#include "mimolab/cli/experiments.hpp"
#include "mimolab/cli/ini.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mimolab::cli;
namespace fs = std::filesystem;

namespace
{
    struct Invocation
    {
        int code;
        std::string out;
        std::string err;
    };

    Invocation invoke(std::vector<std::string> args)
    {
        args.insert(args.begin(), "mimolab_run");
        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = mimolab::cli::main(int(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    fs::path scratch_dir(const std::string &name)
    {
        const auto dir = fs::temp_directory_path() / ("mimolab_test_cli_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    }

    fs::path write_text(const fs::path &p, const std::string &text)
    {
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }
}

TEST_CASE("parse_ini - sections, comments and values")
{
    const auto doc = parse_ini("# comment\nexperiment = squint\n\n[squint]\nrows = 8   # inline\n; another\ncols=4\r\n");
    REQUIRE(doc.size() == 2);
    CHECK(doc[0].name.empty());
    CHECK(doc[0].entries[0].key == "experiment");
    CHECK(doc[0].entries[0].value == "squint");
    CHECK(doc[1].name == "squint");
    REQUIRE(doc[1].entries.size() == 2);
    CHECK(doc[1].entries[0].value == "8");
    CHECK(doc[1].entries[0].line == 5);
    CHECK(doc[1].entries[1].value == "4");
}

TEST_CASE("parse_ini - errors carry line and column")
{
    auto fails_at = [](const std::string &text, std::size_t line, std::size_t column)
    {
        try
        {
            parse_ini(text);
        }
        catch (const ConfigParseError &e)
        {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
            return;
        }
        FAIL("expected a parse error for: " << text);
    };
    fails_at("[run\n", 1, 5);
    fails_at("a = 1\nno equals here\n", 2, 15);
    fails_at("[run]\n = 3\n", 2, 2);
    fails_at("[run]\nkey =\n", 2, 6);
    fails_at("[run]\na = 1\na = 2\n", 3, 1);
    fails_at("[a]\n[a]\n", 2, 1);
    fails_at("[x] y\n", 1, 5);
    fails_at("b$d = 1\n", 1, 2);
}

TEST_CASE("load_config - run section and experiment section")
{
    const auto dir = scratch_dir("load");
    const auto cfg = load_config(write_text(dir / "a.ini", "[run]\nexperiment = fresnel\nseed = 7\noutput = r.json\n[fresnel]\nd1 = 10\n"));
    CHECK(cfg.experiment == "fresnel");
    CHECK(cfg.seed == 7);
    CHECK(cfg.output_path == fs::path("r.json"));
    CHECK(cfg.parameters.at("d1") == "10");

    CHECK_THROWS_AS(load_config(write_text(dir / "b.ini", "[run]\nexperiment = fresnel\n[squint]\nrows = 2\n")), ValidationError);
    CHECK_THROWS_AS(load_config(write_text(dir / "c.ini", "[run]\ncolour = blue\n")), ValidationError);
    CHECK_THROWS_AS(load_config(write_text(dir / "d.ini", "[run]\nseed = -4\n")), ValidationError);
}

TEST_CASE("bundled configs load and map to known experiments")
{
    for (const auto &name : {"fig4_32x32", "fig4_64x64", "fig4_128x128", "centralpark_3ghz", "centralpark_60ghz",
                             "mobility_bound", "estload_200x20", "adc_128v8"})
    {
        const auto cfg = load_config(fs::path(MIMOLAB_CONFIG_DIR) / (std::string(name) + ".ini"));
        const auto *info = find_experiment(cfg.experiment);
        REQUIRE(info != nullptr);
        CHECK_NOTHROW(Parameters(*info, cfg.parameters));
    }
}

TEST_CASE("Parameters - defaults, overrides and typed access")
{
    const auto *info = find_experiment("squint");
    REQUIRE(info);
    const Parameters p(*info, {{"rows", "64"}});
    CHECK(p.count("rows") == 64);
    CHECK(p.count("cols") == 32);
    CHECK(p.real("center_frequency_hz") == 60e9);

    CHECK_THROWS_AS(Parameters(*info, {{"colour", "x"}}), ValidationError);
    CHECK_THROWS_AS(Parameters(*info, {{"rows", "2.5"}}).count("rows"), ValidationError);
    CHECK_THROWS_AS(Parameters(*info, {{"rows", "abc"}}).count("rows"), ValidationError);
    CHECK_THROWS_AS(Parameters(*info, {{"beamformer", "magic"}}).choice("beamformer", {"analog"}), ValidationError);
    try
    {
        Parameters(*info, {{"span_hz", "-1"}}).positive("span_hz");
        FAIL("expected ValidationError");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.field() == "span_hz");
    }

    const auto *lb = find_experiment("linkbudget");
    const Parameters q(*lb, {{"entry.oxygen", "-15"}, {"entry.window", "-40"}});
    CHECK(q.dynamic_entries().size() == 2);
    CHECK_THROWS_AS(Parameters(*lb, {{"entry.", "-1"}}), ValidationError);
}

TEST_CASE("list_experiments - documents every experiment and default")
{
    const std::string text = list_experiments();
    for (const auto &e : experiments())
    {
        CHECK(text.find(e.name) != std::string::npos);
        for (const auto &p : e.params)
            CHECK(text.find(p.key + " = " + p.default_value) != std::string::npos);
    }
    CHECK(experiments().size() == 10);
}

TEST_CASE("main - usage and exit codes")
{
    const auto usage = invoke({});
    CHECK(usage.code == exit_ok);
    CHECK(usage.out.find("Experiments:") != std::string::npos);

    const auto unknown = invoke({"teleport"});
    CHECK(unknown.code == exit_validation_error);
    CHECK(unknown.err.find("squint") != std::string::npos);

    const auto bad_key = invoke({"fresnel", "--d3", "5"});
    CHECK(bad_key.code == exit_validation_error);
    CHECK(bad_key.err.find("d3") != std::string::npos);

    const auto bad_value = invoke({"estload", "--set", "k_users=0"});
    CHECK(bad_value.code == exit_validation_error);
    CHECK(bad_value.err.find("k_users") != std::string::npos);

    const auto dir = scratch_dir("codes");
    const auto bad_syntax = invoke({"--config", write_text(dir / "x.ini", "[run\n").string()});
    CHECK(bad_syntax.code == exit_parse_error);
    CHECK(bad_syntax.err.find(":1:5:") != std::string::npos);

    CHECK(invoke({"--config", (dir / "missing.ini").string()}).code == exit_parse_error);

    const auto overflow = invoke({"capacity", "--ul-snr-reference-db", "300", "--dl-ul-power-ratio", "1e300"});
    CHECK(overflow.code == exit_runtime_error);
}

TEST_CASE("main - fresnel prints the radius")
{
    const auto r = invoke({"fresnel", "--freq-ghz", "38", "--d1", "50", "--d2", "50"});
    REQUIRE(r.code == exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j.at("radius_m").get<double>() - 0.4441) < 5e-4);

    const auto eq = invoke({"fresnel", "--freq-ghz=3"});
    REQUIRE(eq.code == exit_ok);
    CHECK(std::abs(nlohmann::json::parse(eq.out).at("radius_m").get<double>() - 1.58059) < 1e-5);
}

TEST_CASE("main - outputs, manifest and determinism")
{
    const auto dir = scratch_dir("files");
    const auto a = invoke({"squint", "--set", "rows=8", "--set", "cols=8", "--n-points", "11", "--seed", "5",
                           "--output", (dir / "a" / "curve.csv").string()});
    const auto b = invoke({"squint", "--set", "rows=8", "--set", "cols=8", "--n-points", "11", "--seed", "5",
                           "--output", (dir / "b" / "curve.csv").string()});
    REQUIRE(a.code == exit_ok);
    REQUIRE(b.code == exit_ok);

    const std::string csv = slurp(dir / "a" / "curve.csv");
    CHECK(csv.rfind("frequency_hz,efficiency\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
    CHECK(csv == slurp(dir / "b" / "curve.csv"));
    CHECK(slurp(dir / "a" / "curve.csv.manifest.json") == slurp(dir / "b" / "curve.csv.manifest.json"));
    CHECK(!fs::exists(dir / "a" / "curve.csv.tmp"));

    const auto manifest = nlohmann::json::parse(slurp(dir / "a" / "curve.csv.manifest.json"));
    CHECK(manifest.at("seed") == 5);
    CHECK(manifest.at("experiment") == "squint");
    CHECK(manifest.at("parameters").at("rows") == "8");
    CHECK(manifest.at("parameters").at("reflection_split") == "amplitude");
    CHECK(manifest.at("rng_algorithm") == "mt19937_64/u53/boxmuller");
    CHECK(manifest.contains("version"));

    const auto other_seed = invoke({"squint", "--set", "rows=8", "--set", "cols=8", "--n-points", "11", "--seed", "6",
                                    "--output", (dir / "c" / "curve.csv").string()});
    REQUIRE(other_seed.code == exit_ok);
    CHECK(slurp(dir / "c" / "curve.csv") != csv);
}

TEST_CASE("main - JSON experiments")
{
    const auto hw = invoke({"hwbudget"});
    REQUIRE(hw.code == exit_ok);
    const auto j = nlohmann::json::parse(hw.out);
    CHECK(j.at("adc_power_ratio") == 0.5);
    CHECK(j.at("reports").size() == 3);
    CHECK(j.at("reports")[0].at("component") == "adc_a");
    for (const auto &r : j.at("reports"))
        for (const char *key : {"component", "count", "unit_power_w", "total_power_w"})
            CHECK(r.contains(key));

    const auto lb = invoke({"linkbudget", "--set", "entry.oxygen=-15", "--set", "entry.window=-40"});
    REQUIRE(lb.code == exit_ok);
    const auto l = nlohmann::json::parse(lb.out);
    double sum = 0.0;
    for (const auto &e : l.at("entries"))
        sum += e.at("db").get<double>();
    CHECK(std::abs(sum - l.at("total_db").get<double>()) < 1e-9);
    CHECK(l.at("entries").back().at("label") == "window");

    const auto hard = invoke({"hardening", "--m-antennas", "16", "--n-draws", "200", "--seed", "3"});
    REQUIRE(hard.code == exit_ok);
    const auto rec = nlohmann::json::parse(hard.out).at(0);
    for (const char *key : {"model", "m_antennas", "n_draws", "seed", "metric_name", "value"})
        CHECK(rec.contains(key));
    CHECK(rec.at("model") == "iid_rayleigh");
    CHECK(rec.at("seed") == 3);

    const auto mob = invoke({"mobility", "--n-draws", "100"});
    REQUIRE(mob.code == exit_ok);
    CHECK(nlohmann::json::parse(mob.out).at("all_hold") == true);
    CHECK(invoke({"mobility", "--mu-list", "0.2"}).code == exit_validation_error);
}

TEST_CASE("main - config file combined with overrides")
{
    const auto dir = scratch_dir("override");
    const auto cfg = write_text(dir / "f.ini", "[run]\nexperiment = fresnel\n[fresnel]\nfreq_ghz = 3\nd1 = 50\n");
    const auto r = invoke({"--config", cfg.string(), "--freq-ghz", "38"});
    REQUIRE(r.code == exit_ok);
    CHECK(std::abs(nlohmann::json::parse(r.out).at("radius_m").get<double>() - 0.4441) < 5e-4);

    const auto s = invoke({"--config", cfg.string(), "--set", "d2=50"});
    REQUIRE(s.code == exit_ok);
    CHECK(std::abs(nlohmann::json::parse(s.out).at("radius_m").get<double>() - 1.58059) < 1e-5);

    CHECK(invoke({"--config", cfg.string(), "squint"}).code == exit_validation_error);
    CHECK(invoke({"fresnel", "stray"}).code == exit_validation_error);
}
