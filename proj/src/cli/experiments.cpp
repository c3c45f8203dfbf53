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

#include "mimolab/cli/experiments.hpp"

#include "mimolab/beamforming.hpp"
#include "mimolab/capacity.hpp"
#include "mimolab/channels.hpp"
#include "mimolab/hardware.hpp"
#include "mimolab/io.hpp"
#include "mimolab/propagation.hpp"
#include "mimolab/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace
{
    using mimolab::cli::ExperimentInfo;
    using mimolab::cli::Parameters;
    using mimolab::cli::ValidationError;
    using nlohmann::json;

    const std::vector<mimolab::cli::ParamSpec> capacity_params = {
        {"carrier_hz", "3e9", "Carrier frequency"},
        {"bandwidth_hz", "50e6", "Signal bandwidth"},
        {"m_antennas", "100000", "Base-station antennas M"},
        {"ul_snr_reference_db", "20", "Uplink SNR per receive antenna in the reference setup"},
        {"reference_bandwidth_hz", "50e6", "Bandwidth of the reference setup"},
        {"reference_carrier_hz", "3e9", "Carrier of the reference setup"},
        {"ul_snr_scaling", "bandwidth", "Reference-to-scenario SNR scaling: none | bandwidth | bandwidth_aperture"},
        {"dl_ul_power_ratio", "100", "Downlink to uplink-pilot power ratio"},
        {"coherence_time_s", "0.1", "Coherence time"},
        {"coherence_bandwidth_hz", "400e3", "Coherence bandwidth"},
        {"fine", "false", "Sweep every K = 1..tau_c instead of step max(1, tau_c/1000)"},
    };

    std::vector<mimolab::cli::ParamSpec> with(std::vector<mimolab::cli::ParamSpec> base,
                                              std::initializer_list<mimolab::cli::ParamSpec> extra)
    {
        base.insert(base.end(), extra);
        return base;
    }

    std::vector<ExperimentInfo> make_registry()
    {
        return {
            {"squint", "Beamforming efficiency across frequency for the LoS + five reflections channel", "csv",
             {
                 {"rows", "32", "Array rows"},
                 {"cols", "32", "Array columns"},
                 {"center_frequency_hz", "60e9", "Design and centre frequency (half-wavelength spacing)"},
                 {"span_hz", "2e9", "Swept bandwidth around the centre"},
                 {"n_points", "201", "Number of evaluation frequencies"},
                 {"reflection_split", "amplitude", "LoS/reflection gain split: amplitude | power"},
                 {"beamformer", "analog", "analog | hybrid | digital"},
                 {"n_rf", "4", "RF chains for the hybrid beamformer"},
             },
             ""},
            {"capacity", "Downlink MRT sum rate versus number of users K", "csv", capacity_params, ""},
            {"antenna-sweep", "Best sum rate for each number of antennas M", "csv",
             with(capacity_params, {{"m_grid", "100,1000,10000,100000", "Antenna counts"}}), ""},
            {"mobility", "Beamforming gain after moving a fraction mu of the wavelength", "json",
             {
                 {"m_antennas", "64", "Antennas M"},
                 {"mu_list", "0.125,0.0625", "Drift fractions mu (each <= 1/8)"},
                 {"n_draws", "100000", "Random phase patterns per mu"},
             },
             ""},
            {"fresnel", "First Fresnel zone radius", "json",
             {
                 {"freq_ghz", "38", "Carrier frequency in GHz"},
                 {"d1", "50", "Distance to the first link end in m"},
                 {"d2", "50", "Distance to the second link end in m"},
             },
             ""},
            {"linkbudget", "Friis received power plus a dB ledger (entry.<label> = dB)", "json",
             {
                 {"tx_power_dbm", "30", "Transmit power"},
                 {"frequency_hz", "38e9", "Carrier frequency"},
                 {"distance_m", "100", "Link distance"},
                 {"tx_mode", "fixed_gain", "fixed_gain | fixed_area"},
                 {"tx_value", "1", "Linear gain or effective area in m^2"},
                 {"rx_mode", "fixed_gain", "fixed_gain | fixed_area"},
                 {"rx_value", "1", "Linear gain or effective area in m^2"},
                 {"bandwidth_ratio", "1", "Bandwidth increase relative to the reference link (>= 1)"},
             },
             "entry."},
            {"estload", "Channel-estimation load", "json",
             {
                 {"m_antennas", "200", "Base-station antennas"},
                 {"k_users", "20", "Single-antenna users"},
                 {"n_subcarriers", "1024", "OFDM subcarriers"},
                 {"subcarriers_per_block", "12", "Subcarriers sharing one channel estimate"},
                 {"coherence_time_s", "0.05", "Coherence time"},
             },
             ""},
            {"hwbudget", "ADC and PA power budgets", "json",
             {
                 {"adc_fom_j", "30e-15", "ADC energy per conversion step"},
                 {"adc_sample_rate_hz", "100e6", "ADC sample rate"},
                 {"adc_overhead", "1", "ADC overhead factor in [1, 10]"},
                 {"adc_a_count", "128", "Converters in array A"},
                 {"adc_a_enob", "5", "ENOB in array A"},
                 {"adc_b_count", "8", "Converters in array B"},
                 {"adc_b_enob", "10", "ENOB in array B"},
                 {"pa_count", "128", "Power amplifiers"},
                 {"pa_total_power_w", "1", "Total radiated power"},
                 {"pa_pae", "0.18", "Power added efficiency"},
             },
             ""},
            {"hardening", "Channel hardening std(|h|^2)/mean(|h|^2) for i.i.d. Rayleigh fading", "json",
             {
                 {"m_antennas", "100,10000", "Antenna counts"},
                 {"n_draws", "10000", "Channel realisations per M"},
             },
             ""},
            {"favorable", "Favorable propagation: mean normalised inner product of independent channels", "json",
             {
                 {"m_antennas", "100,10000", "Antenna counts"},
                 {"n_pairs", "1000", "Channel pairs per M"},
             },
             ""},
        };
    }

    double parse_real(const std::string &key, const std::string &text)
    {
        const char *begin = text.c_str();
        char *end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || !std::isfinite(v))
            throw ValidationError(key, "expected a number, got '" + text + "'");
        return v;
    }

    std::uint64_t parse_count(const std::string &key, const std::string &text)
    {
        const double v = parse_real(key, text);
        if (!(v >= 1.0) || v != std::floor(v) || v > 9.0e15)
            throw ValidationError(key, "expected a positive integer, got '" + text + "'");
        return std::uint64_t(v);
    }

    std::vector<std::string> split_list(const std::string &key, const std::string &text)
    {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
        {
            const auto b = item.find_first_not_of(" \t");
            const auto e = item.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ValidationError(key, "empty list element in '" + text + "'");
            out.push_back(item.substr(b, e - b + 1));
        }
        if (out.empty())
            throw ValidationError(key, "empty list");
        return out;
    }

    // ---------------------------------------------------------------------------------------------

    mimolab::CapacityScenario capacity_scenario(const Parameters &p, std::string &scaling_name)
    {
        mimolab::CapacityScenario s;
        s.carrier_hz = p.positive("carrier_hz");
        s.bandwidth_hz = p.positive("bandwidth_hz");
        s.m_antennas = p.count("m_antennas");
        scaling_name = p.choice("ul_snr_scaling", {"none", "bandwidth", "bandwidth_aperture"});
        s.ul_pilot_snr = mimolab::scaled_ul_snr(mimolab::from_db(p.real("ul_snr_reference_db")), p.positive("reference_bandwidth_hz"),
                                                p.positive("reference_carrier_hz"), s.bandwidth_hz, s.carrier_hz,
                                                *mimolab::parse_ul_snr_scaling(scaling_name));
        s.dl_ul_power_ratio = p.positive("dl_ul_power_ratio");
        s.block = mimolab::CoherenceBlock(p.positive("coherence_time_s"), p.positive("coherence_bandwidth_hz"));
        return s;
    }

    json rate_point_json(std::uint64_t m, const mimolab::RatePoint &r)
    {
        return {{"m_antennas", m},
                {"k_users", r.k_users},
                {"pilot_fraction", r.pilot_fraction},
                {"sinr", r.sinr},
                {"se_per_ue", r.se_per_ue},
                {"rate_per_ue_bps", r.rate_per_ue_bps},
                {"sum_rate_bps", r.sum_rate_bps}};
    }

    std::string dump(const json &j)
    {
        return j.dump(2) + "\n";
    }

    mimolab::cli::ExperimentOutput run_squint(const Parameters &p, std::uint64_t seed)
    {
        const auto array = mimolab::PlanarArray::half_wavelength_at(p.count("rows"), p.count("cols"), p.positive("center_frequency_hz"));
        const auto split = p.choice("reflection_split", {"amplitude", "power"}) == "power" ? mimolab::ReflectionSplit::power
                                                                                           : mimolab::ReflectionSplit::amplitude;
        const std::string kind_name = p.choice("beamformer", {"analog", "hybrid", "digital"});
        const auto kind = kind_name == "analog"   ? mimolab::BeamformerKind::analog
                          : kind_name == "hybrid" ? mimolab::BeamformerKind::hybrid
                                                  : mimolab::BeamformerKind::digital;
        const std::uint64_t n_points = p.count("n_points");
        if (n_points < 2)
            throw ValidationError("n_points", "at least 2 points are required");
        const double span = p.positive("span_hz");
        if (!(array.design_frequency_hz() - span / 2.0 > 0.0))
            throw ValidationError("span_hz", "sweep would reach non-positive frequencies");
        const std::uint64_t n_rf = p.count("n_rf");
        if (kind == mimolab::BeamformerKind::hybrid && n_rf > array.element_count())
            throw ValidationError("n_rf", "must not exceed the number of antennas");

        const auto channel = mimolab::los_with_reflections(seed, split);
        const auto curve = mimolab::squint_sweep(array, channel, array.design_frequency_hz(), span, n_points, kind, n_rf);

        std::ostringstream os;
        mimolab::write_csv(os, curve);

        const std::size_t mid = (n_points - 1) / 2;
        const auto [lo, hi] = std::minmax_element(curve.efficiency.begin(), curve.efficiency.end());
        json summary = {{"elements", array.element_count()},
                        {"min_efficiency", *lo},
                        {"max_efficiency", *hi}};
        if (n_points % 2 == 1)
            summary["center_efficiency"] = curve.efficiency[mid];

        std::ostringstream console;
        console << "squint " << array.rows() << "x" << array.cols() << " (" << kind_name << "): min "
                << mimolab::format_double(*lo) << ", max " << mimolab::format_double(*hi) << "\n";
        return {os.str(), summary, console.str()};
    }

    mimolab::cli::ExperimentOutput run_capacity(const Parameters &p)
    {
        std::string scaling;
        const auto scenario = capacity_scenario(p, scaling);
        const auto grid = mimolab::default_k_grid(scenario.block.samples(), p.flag("fine"));

        std::ostringstream os;
        mimolab::write_csv_header(os);
        for (std::uint64_t k : grid)
            mimolab::write_csv_row(os, scenario.m_antennas, mimolab::sum_rate(scenario, k));
        const auto best = mimolab::optimize_users(scenario, grid);

        json summary = {{"tau_c", scenario.block.samples()},
                        {"ul_pilot_snr", scenario.ul_pilot_snr},
                        {"ul_snr_scaling", scaling},
                        {"optimum", rate_point_json(scenario.m_antennas, best)}};

        std::ostringstream console;
        console << "optimum K = " << best.k_users << ", pilot fraction " << mimolab::format_double(best.pilot_fraction)
                << ", per-UE " << mimolab::format_double(best.rate_per_ue_bps) << " bit/s, sum "
                << mimolab::format_double(best.sum_rate_bps) << " bit/s\n";
        return {os.str(), summary, console.str()};
    }

    mimolab::cli::ExperimentOutput run_antenna_sweep(const Parameters &p)
    {
        std::string scaling;
        const auto scenario = capacity_scenario(p, scaling);
        const auto grid = mimolab::default_k_grid(scenario.block.samples(), p.flag("fine"));
        const auto sweep = mimolab::antenna_sweep(scenario, p.count_list("m_grid"), grid);

        std::ostringstream os, console;
        mimolab::write_csv_header(os);
        json points = json::array();
        for (const auto &pt : sweep)
        {
            mimolab::write_csv_row(os, pt.m_antennas, pt.best);
            points.push_back(rate_point_json(pt.m_antennas, pt.best));
            console << "M = " << pt.m_antennas << ": K = " << pt.best.k_users << ", sum "
                    << mimolab::format_double(pt.best.sum_rate_bps) << " bit/s\n";
        }
        json summary = {{"tau_c", scenario.block.samples()}, {"ul_snr_scaling", scaling}, {"points", points}};
        return {os.str(), summary, console.str()};
    }

    mimolab::cli::ExperimentOutput run_mobility(const Parameters &p, std::uint64_t seed)
    {
        const std::uint64_t m = p.count("m_antennas");
        const std::uint64_t n_draws = p.count("n_draws");
        json records = json::array();
        std::ostringstream console;
        bool all_hold = true;
        const auto mus = p.real_list("mu_list");
        for (std::size_t i = 0; i < mus.size(); ++i)
        {
            if (!(mus[i] >= 0.0 && mus[i] <= 0.125))
                throw ValidationError("mu_list", "every mu must lie in [0, 1/8]");
            const auto r = mimolab::drift_bound_check(m, mus[i], n_draws, mimolab::child_seed(seed, i));
            all_hold = all_hold && r.holds();
            records.push_back({{"m_antennas", r.m_antennas},
                               {"mu", r.mu},
                               {"n_patterns", r.n_patterns},
                               {"min_observed_gain", r.min_observed_gain},
                               {"max_observed_gain", r.max_observed_gain},
                               {"bound", r.bound},
                               {"half_m", double(m) / 2.0},
                               {"violations", r.violations},
                               {"holds", r.holds()}});
            console << "mu = " << mimolab::format_double(r.mu) << ": min gain " << mimolab::format_double(r.min_observed_gain)
                    << ", bound " << mimolab::format_double(r.bound) << (r.holds() ? " (holds)" : " (VIOLATED)") << "\n";
        }
        json out = {{"records", records}, {"all_hold", all_hold}};
        return {dump(out), {{"all_hold", all_hold}}, console.str()};
    }

    mimolab::cli::ExperimentOutput run_fresnel(const Parameters &p)
    {
        const double f = p.positive("freq_ghz") * 1e9;
        const double d1 = p.real("d1"), d2 = p.real("d2");
        if (d1 < 0.0)
            throw ValidationError("d1", "must be non-negative");
        if (d2 < 0.0)
            throw ValidationError("d2", "must be non-negative");
        if (!(d1 + d2 > 0.0))
            throw ValidationError("d2", "d1 + d2 must be positive");
        const double r = mimolab::fresnel_radius(mimolab::LinkGeometry(d1, d2, f));
        json out = {{"frequency_hz", f}, {"d1_m", d1}, {"d2_m", d2}, {"wavelength_m", mimolab::wavelength(f)}, {"radius_m", r}};
        return {dump(out), {{"radius_m", r}}, mimolab::format_double(r) + " m\n"};
    }

    mimolab::AntennaSpec antenna(const Parameters &p, const std::string &prefix)
    {
        const std::string mode = p.choice(prefix + "_mode", {"fixed_gain", "fixed_area"});
        const double value = p.positive(prefix + "_value");
        return mode == "fixed_gain" ? mimolab::AntennaSpec::fixed_gain(value) : mimolab::AntennaSpec::fixed_area(value);
    }

    mimolab::cli::ExperimentOutput run_linkbudget(const Parameters &p)
    {
        const double f = p.positive("frequency_hz");
        const double d = p.positive("distance_m");
        const double ratio = p.real("bandwidth_ratio");
        if (!(ratio >= 1.0))
            throw ValidationError("bandwidth_ratio", "must be >= 1");
        const auto tx = antenna(p, "tx"), rx = antenna(p, "rx");
        const double lambda = mimolab::wavelength(f);
        const double p_tx_dbm = p.real("tx_power_dbm");

        mimolab::LinkBudget ledger;
        ledger.add("tx_power_dbm", p_tx_dbm);
        ledger.add("tx_antenna_gain_db", mimolab::to_db(tx.gain_at(lambda)));
        ledger.add("rx_antenna_gain_db", mimolab::to_db(rx.gain_at(lambda)));
        ledger.add("free_space_db", 20.0 * std::log10(lambda / (4.0 * std::numbers::pi * d)));
        const double rx_dbm = mimolab::to_db(mimolab::friis_rx_power(mimolab::from_db(p_tx_dbm), tx, rx, d, f));
        ledger.add("bandwidth_snr_delta_db", mimolab::bandwidth_snr_delta_db(ratio));
        for (const auto &[key, value] : p.dynamic_entries())
            ledger.add(key.substr(std::string("entry.").size()), parse_real(key, value));

        json entries = json::array();
        for (const auto &e : ledger.entries)
            entries.push_back({{"label", e.label}, {"db", e.db}});
        json out = {{"entries", entries}, {"friis_rx_power_dbm", rx_dbm}, {"total_db", ledger.total_db()}};
        return {dump(out), {{"total_db", ledger.total_db()}, {"friis_rx_power_dbm", rx_dbm}},
                "total " + mimolab::format_double(ledger.total_db()) + " dB\n"};
    }

    mimolab::cli::ExperimentOutput run_estload(const Parameters &p)
    {
        mimolab::EstimationLoadSpec spec;
        spec.m_antennas = p.count("m_antennas");
        spec.k_users = p.count("k_users");
        spec.n_subcarriers = p.count("n_subcarriers");
        spec.subcarriers_per_block = p.count("subcarriers_per_block");
        if (spec.subcarriers_per_block > spec.n_subcarriers)
            throw ValidationError("subcarriers_per_block", "must not exceed n_subcarriers");
        spec.coherence_time_s = p.positive("coherence_time_s");
        const auto load = mimolab::estimation_load(spec);
        json out = {{"n_coefficients", load.n_coefficients}, {"estimates_per_second", load.estimates_per_second}};
        return {dump(out), out,
                std::to_string(load.n_coefficients) + " coefficients, " + mimolab::format_double(load.estimates_per_second) +
                    " estimates/s\n"};
    }

    json report_json(const mimolab::BudgetReport &r)
    {
        return {{"component", r.component}, {"count", r.count}, {"unit_power_w", r.unit_power_w}, {"total_power_w", r.total_power_w}};
    }

    mimolab::cli::ExperimentOutput run_hwbudget(const Parameters &p)
    {
        mimolab::AdcSpec a, b;
        a.fom_j_per_cs = b.fom_j_per_cs = p.positive("adc_fom_j");
        a.sample_rate_hz = b.sample_rate_hz = p.positive("adc_sample_rate_hz");
        a.overhead_factor = b.overhead_factor = p.real("adc_overhead");
        if (!(a.overhead_factor >= 1.0 && a.overhead_factor <= 10.0))
            throw ValidationError("adc_overhead", "must lie in [1, 10]");
        a.enob = p.real("adc_a_enob");
        b.enob = p.real("adc_b_enob");
        if (!(a.enob >= 1.0))
            throw ValidationError("adc_a_enob", "must be at least 1");
        if (!(b.enob >= 1.0))
            throw ValidationError("adc_b_enob", "must be at least 1");
        const double pae = p.positive("pa_pae");
        if (pae > 1.0)
            throw ValidationError("pa_pae", "must lie in (0, 1]");

        const auto ra = mimolab::adc_report("adc_a", p.count("adc_a_count"), a);
        const auto rb = mimolab::adc_report("adc_b", p.count("adc_b_count"), b);
        const auto rp = mimolab::pa_report("pa", p.count("pa_count"), p.positive("pa_total_power_w"), pae);
        const double ratio = ra.total_power_w / rb.total_power_w;

        json out = {{"reports", {report_json(ra), report_json(rb), report_json(rp)}}, {"adc_power_ratio", ratio}};
        return {dump(out), {{"adc_power_ratio", ratio}}, "ADC power ratio A/B = " + mimolab::format_double(ratio) + "\n"};
    }

    template <typename Metric>
    mimolab::cli::ExperimentOutput run_metric(const Parameters &p, std::uint64_t seed, const std::string &name,
                                              const std::string &count_key, Metric metric)
    {
        const std::uint64_t n = p.count(count_key);
        if (count_key == "n_draws" && n < 2)
            throw ValidationError(count_key, "at least 2 draws are required");
        json records = json::array();
        std::ostringstream console;
        for (std::uint64_t m : p.count_list("m_antennas"))
        {
            const auto spec = mimolab::RandomChannelSpec::iid_rayleigh(m, seed);
            const double value = metric(spec, n);
            records.push_back({{"model", spec.model_name()},
                               {"m_antennas", m},
                               {"n_draws", n},
                               {"seed", seed},
                               {"metric_name", name},
                               {"value", value}});
            console << name << " M = " << m << ": " << mimolab::format_double(value) << "\n";
        }
        return {dump(records), records, console.str()};
    }
}

const std::vector<mimolab::cli::ExperimentInfo> &mimolab::cli::experiments()
{
    static const std::vector<ExperimentInfo> registry = make_registry();
    return registry;
}

const mimolab::cli::ExperimentInfo *mimolab::cli::find_experiment(const std::string &name)
{
    for (const auto &e : experiments())
        if (e.name == name)
            return &e;
    return nullptr;
}

std::string mimolab::cli::list_experiments()
{
    std::ostringstream os;
    os << "Experiments:\n";
    for (const auto &e : experiments())
    {
        os << "\n  " << e.name << " (" << e.output_format << ")  " << e.description << "\n";
        for (const auto &p : e.params)
            os << "      " << p.key << " = " << p.default_value << "    " << p.description << "\n";
        if (!e.dynamic_prefix.empty())
            os << "      " << e.dynamic_prefix << "<label> = <dB>    Extra ledger entries\n";
    }
    return os.str();
}

mimolab::cli::Parameters::Parameters(const ExperimentInfo &info, const std::map<std::string, std::string> &overrides)
    : info_(&info)
{
    for (const auto &p : info.params)
        values_[p.key] = p.default_value;
    for (const auto &[key, value] : overrides)
    {
        const bool known = values_.count(key) > 0;
        const bool dynamic = !info.dynamic_prefix.empty() && key.rfind(info.dynamic_prefix, 0) == 0 &&
                             key.size() > info.dynamic_prefix.size();
        if (!known && !dynamic)
            throw ValidationError(key, "unknown parameter for experiment '" + info.name + "'");
        values_[key] = value;
    }
}

std::string mimolab::cli::Parameters::text(const std::string &key) const
{
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ValidationError(key, "missing parameter");
    return it->second;
}

double mimolab::cli::Parameters::real(const std::string &key) const
{
    return parse_real(key, text(key));
}

double mimolab::cli::Parameters::positive(const std::string &key) const
{
    const double v = real(key);
    if (!(v > 0.0))
        throw ValidationError(key, "must be positive");
    return v;
}

std::uint64_t mimolab::cli::Parameters::count(const std::string &key) const
{
    return parse_count(key, text(key));
}

bool mimolab::cli::Parameters::flag(const std::string &key) const
{
    const std::string v = text(key);
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ValidationError(key, "expected true or false, got '" + v + "'");
}

std::string mimolab::cli::Parameters::choice(const std::string &key, const std::vector<std::string> &allowed) const
{
    const std::string v = text(key);
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
    {
        std::string list;
        for (const auto &a : allowed)
            list += (list.empty() ? "" : " | ") + a;
        throw ValidationError(key, "expected one of " + list + ", got '" + v + "'");
    }
    return v;
}

std::vector<double> mimolab::cli::Parameters::real_list(const std::string &key) const
{
    std::vector<double> out;
    for (const auto &item : split_list(key, text(key)))
        out.push_back(parse_real(key, item));
    return out;
}

std::vector<std::uint64_t> mimolab::cli::Parameters::count_list(const std::string &key) const
{
    std::vector<std::uint64_t> out;
    for (const auto &item : split_list(key, text(key)))
        out.push_back(parse_count(key, item));
    return out;
}

std::vector<std::pair<std::string, std::string>> mimolab::cli::Parameters::dynamic_entries() const
{
    std::vector<std::pair<std::string, std::string>> out;
    if (info_->dynamic_prefix.empty())
        return out;
    for (const auto &[key, value] : values_)
        if (key.rfind(info_->dynamic_prefix, 0) == 0)
            out.emplace_back(key, value);
    return out;
}

mimolab::cli::ExperimentOutput mimolab::cli::execute(const ExperimentInfo &info, const Parameters &params, std::uint64_t seed)
{
    if (info.name == "squint")
        return run_squint(params, seed);
    if (info.name == "capacity")
        return run_capacity(params);
    if (info.name == "antenna-sweep")
        return run_antenna_sweep(params);
    if (info.name == "mobility")
        return run_mobility(params, seed);
    if (info.name == "fresnel")
        return run_fresnel(params);
    if (info.name == "linkbudget")
        return run_linkbudget(params);
    if (info.name == "estload")
        return run_estload(params);
    if (info.name == "hwbudget")
        return run_hwbudget(params);
    if (info.name == "hardening")
        return run_metric(params, seed, "hardening", "n_draws", [](const auto &spec, std::uint64_t n)
                          { return mimolab::hardening_metric(spec, n); });
    if (info.name == "favorable")
        return run_metric(params, seed, "favorable_propagation", "n_pairs", [](const auto &spec, std::uint64_t n)
                          { return mimolab::favorable_propagation_metric(spec, n); });
    throw ValidationError("experiment", "unknown experiment '" + info.name + "'");
}
