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

#include "mimolab/capacity.hpp"
#include "mimolab/io.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

mimolab::CoherenceBlock::CoherenceBlock(double coherence_time_s, double coherence_bandwidth_hz)
    : time_s_(coherence_time_s), bandwidth_hz_(coherence_bandwidth_hz)
{
    if (!(coherence_time_s > 0.0) || !(coherence_bandwidth_hz > 0.0))
        throw std::invalid_argument("Coherence time and bandwidth must be positive");
    const double samples = std::round(coherence_time_s * coherence_bandwidth_hz);
    if (samples < 1.0)
        throw std::invalid_argument("Coherence block must contain at least one sample");
    samples_ = std::uint64_t(samples);
}

void mimolab::CapacityScenario::validate() const
{
    if (!(carrier_hz > 0.0) || !(bandwidth_hz > 0.0))
        throw std::invalid_argument("Carrier and bandwidth must be positive");
    if (m_antennas == 0)
        throw std::invalid_argument("m_antennas must be positive");
    if (!(ul_pilot_snr > 0.0) || !(dl_ul_power_ratio > 0.0))
        throw std::invalid_argument("SNR and power ratio must be positive");
}

std::string mimolab::to_string(UlSnrScaling scaling)
{
    switch (scaling)
    {
    case UlSnrScaling::none:
        return "none";
    case UlSnrScaling::bandwidth:
        return "bandwidth";
    case UlSnrScaling::bandwidth_aperture:
        return "bandwidth_aperture";
    }
    return "unknown";
}

std::optional<mimolab::UlSnrScaling> mimolab::parse_ul_snr_scaling(const std::string &name)
{
    for (auto s : {UlSnrScaling::none, UlSnrScaling::bandwidth, UlSnrScaling::bandwidth_aperture})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

double mimolab::scaled_ul_snr(double reference_snr, double reference_bandwidth_hz, double reference_carrier_hz,
                              double bandwidth_hz, double carrier_hz, UlSnrScaling scaling)
{
    switch (scaling)
    {
    case UlSnrScaling::none:
        return reference_snr;
    case UlSnrScaling::bandwidth:
        return reference_snr * reference_bandwidth_hz / bandwidth_hz;
    case UlSnrScaling::bandwidth_aperture:
    {
        const double r = reference_carrier_hz / carrier_hz;
        return reference_snr * reference_bandwidth_hz / bandwidth_hz * r * r;
    }
    }
    return reference_snr;
}

mimolab::CapacityScenario mimolab::central_park_3ghz()
{
    return CapacityScenario{};
}

mimolab::CapacityScenario mimolab::central_park_60ghz(UlSnrScaling scaling)
{
    const CapacityScenario ref = central_park_3ghz();
    CapacityScenario s;
    s.carrier_hz = 60e9;
    s.bandwidth_hz = 1e9;
    s.ul_pilot_snr = scaled_ul_snr(ref.ul_pilot_snr, ref.bandwidth_hz, ref.carrier_hz, s.bandwidth_hz, s.carrier_hz, scaling);
    s.block = CoherenceBlock(5e-3, 400e3);
    return s;
}

double mimolab::estimation_quality(double tau_p, double rho_ul)
{
    if (!(tau_p >= 1.0))
        throw std::invalid_argument("tau_p must be at least 1");
    if (!(rho_ul > 0.0))
        throw std::invalid_argument("Uplink SNR must be positive");
    const double x = tau_p * rho_ul;
    return x / (1.0 + x);
}

namespace
{
    void require_users(const mimolab::CapacityScenario &scenario, std::uint64_t k_users)
    {
        scenario.validate();
        if (k_users == 0)
            throw std::invalid_argument("At least one user is required");
        if (k_users > scenario.block.samples())
            throw std::invalid_argument("K = " + std::to_string(k_users) + " exceeds the coherence block tau_c = " +
                                        std::to_string(scenario.block.samples()));
    }
}

double mimolab::dl_sinr_mrt(const CapacityScenario &scenario, std::uint64_t k_users)
{
    require_users(scenario, k_users);
    const double k = double(k_users);
    const double gamma = estimation_quality(k, scenario.ul_pilot_snr);
    const double rho_dl = scenario.dl_snr();
    return double(scenario.m_antennas) * gamma * (rho_dl / k) / (1.0 + rho_dl);
}

double mimolab::dl_se_mrt(const CapacityScenario &scenario, std::uint64_t k_users)
{
    const double sinr = dl_sinr_mrt(scenario, k_users);
    const double prelog = 1.0 - double(k_users) / double(scenario.block.samples());
    return prelog * std::log2(1.0 + sinr);
}

mimolab::RatePoint mimolab::sum_rate(const CapacityScenario &scenario, std::uint64_t k_users)
{
    RatePoint p;
    p.k_users = k_users;
    p.tau_p = k_users;
    p.sinr = dl_sinr_mrt(scenario, k_users);
    p.pilot_fraction = double(k_users) / double(scenario.block.samples());
    p.se_per_ue = (1.0 - p.pilot_fraction) * std::log2(1.0 + p.sinr);
    p.rate_per_ue_bps = p.se_per_ue * scenario.bandwidth_hz;
    p.sum_rate_bps = double(k_users) * p.rate_per_ue_bps;
    return p;
}

std::vector<std::uint64_t> mimolab::default_k_grid(std::uint64_t tau_c, bool fine)
{
    if (tau_c == 0)
        throw std::invalid_argument("tau_c must be positive");
    const std::uint64_t step = fine ? 1 : std::max<std::uint64_t>(1, tau_c / 1000);
    std::vector<std::uint64_t> grid;
    for (std::uint64_t k = 1; k <= tau_c; k += step)
        grid.push_back(k);
    return grid;
}

mimolab::RatePoint mimolab::optimize_users(const CapacityScenario &scenario, const std::vector<std::uint64_t> &k_grid)
{
    if (k_grid.empty())
        throw std::invalid_argument("User grid must not be empty");

    std::optional<RatePoint> best;
    for (std::uint64_t k : k_grid)
    {
        const RatePoint p = sum_rate(scenario, k);
        if (!best || p.sum_rate_bps > best->sum_rate_bps ||
            (p.sum_rate_bps == best->sum_rate_bps && p.k_users < best->k_users))
            best = p;
    }
    return *best;
}

std::vector<mimolab::AntennaSweepPoint> mimolab::antenna_sweep(const CapacityScenario &scenario,
                                                               std::vector<std::uint64_t> m_grid,
                                                               const std::vector<std::uint64_t> &k_grid)
{
    if (m_grid.empty())
        throw std::invalid_argument("Antenna grid must not be empty");
    std::sort(m_grid.begin(), m_grid.end());

    std::vector<AntennaSweepPoint> out;
    out.reserve(m_grid.size());
    CapacityScenario s = scenario;
    for (std::uint64_t m : m_grid)
    {
        s.m_antennas = m;
        out.push_back({m, optimize_users(s, k_grid)});
    }
    return out;
}

void mimolab::write_csv_header(std::ostream &os)
{
    os << "m_antennas,k_users,pilot_fraction,se_per_ue,rate_per_ue_bps,sum_rate_bps\n";
}

void mimolab::write_csv_row(std::ostream &os, std::uint64_t m_antennas, const RatePoint &point)
{
    os << m_antennas << ',' << point.k_users << ',' << format_double(point.pilot_fraction) << ','
       << format_double(point.se_per_ue) << ',' << format_double(point.rate_per_ue_bps) << ','
       << format_double(point.sum_rate_bps) << '\n';
}
