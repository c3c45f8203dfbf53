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

#include "mimolab/propagation.hpp"
#include "mimolab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

mimolab::LinkGeometry::LinkGeometry(double d1_m, double d2_m, double frequency_hz)
    : d1_(d1_m), d2_(d2_m), frequency_hz_(frequency_hz)
{
    if (!(d1_m >= 0.0) || !(d2_m >= 0.0) || !(d1_m + d2_m > 0.0))
        throw std::invalid_argument("Link distances must be non-negative with a positive sum");
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("Frequency must be positive");
}

double mimolab::fresnel_radius(const LinkGeometry &geom)
{
    const double lambda = wavelength(geom.frequency_hz());
    return std::sqrt(lambda * geom.d1_m() * geom.d2_m() / (geom.d1_m() + geom.d2_m()));
}

mimolab::AntennaSpec mimolab::AntennaSpec::fixed_gain(double gain_linear)
{
    if (!(gain_linear > 0.0))
        throw std::invalid_argument("Antenna gain must be positive");
    return AntennaSpec(Mode::fixed_gain, gain_linear);
}

mimolab::AntennaSpec mimolab::AntennaSpec::fixed_area(double area_m2)
{
    if (!(area_m2 > 0.0))
        throw std::invalid_argument("Antenna area must be positive");
    return AntennaSpec(Mode::fixed_area, area_m2);
}

double mimolab::AntennaSpec::gain_at(double wavelength_m) const
{
    if (mode_ == Mode::fixed_gain)
        return value_;
    return 4.0 * std::numbers::pi * value_ / (wavelength_m * wavelength_m);
}

double mimolab::friis_rx_power(double p_tx_w, const AntennaSpec &tx, const AntennaSpec &rx, double distance_m,
                               double frequency_hz)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("Link distance must be positive");
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("Frequency must be positive");

    const double lambda = wavelength(frequency_hz);
    const double free_space = lambda / (4.0 * std::numbers::pi * distance_m);
    return p_tx_w * tx.gain_at(lambda) * rx.gain_at(lambda) * free_space * free_space;
}

double mimolab::bandwidth_snr_delta_db(double bandwidth_ratio)
{
    if (!(bandwidth_ratio >= 1.0))
        throw std::invalid_argument("Bandwidth ratio must be >= 1, got " + std::to_string(bandwidth_ratio));
    return -10.0 * std::log10(bandwidth_ratio);
}

void mimolab::EstimationLoadSpec::validate() const
{
    if (m_antennas == 0 || k_users == 0 || n_subcarriers == 0 || subcarriers_per_block == 0)
        throw std::invalid_argument("Estimation load counts must be positive");
    if (subcarriers_per_block > n_subcarriers)
        throw std::invalid_argument("subcarriers_per_block exceeds n_subcarriers");
    if (!(coherence_time_s > 0.0))
        throw std::invalid_argument("Coherence time must be positive");
}

mimolab::EstimationLoad mimolab::estimation_load(const EstimationLoadSpec &spec)
{
    spec.validate();
    const std::uint64_t blocks = (spec.n_subcarriers + spec.subcarriers_per_block - 1) / spec.subcarriers_per_block;
    EstimationLoad out;
    out.n_coefficients = spec.m_antennas * spec.k_users * blocks;
    out.estimates_per_second = double(out.n_coefficients) / spec.coherence_time_s;
    return out;
}

double mimolab::LinkBudget::total_db() const
{
    double total = 0.0;
    for (const auto &e : entries)
        total += e.db;
    return total;
}

double mimolab::to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double mimolab::from_db(double db)
{
    return std::pow(10.0, db / 10.0);
}
