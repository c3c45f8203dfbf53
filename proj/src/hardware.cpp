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

#include "mimolab/hardware.hpp"

#include <cmath>
#include <stdexcept>

void mimolab::AdcSpec::validate() const
{
    if (!(fom_j_per_cs > 0.0))
        throw std::invalid_argument("ADC figure of merit must be positive");
    if (!(enob >= 1.0))
        throw std::invalid_argument("ENOB must be at least 1");
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("ADC sample rate must be positive");
    if (!(overhead_factor >= 1.0 && overhead_factor <= 10.0))
        throw std::invalid_argument("ADC overhead factor must lie in [1, 10]");
}

void mimolab::PaSpec::validate() const
{
    if (!(avg_output_power_w > 0.0))
        throw std::invalid_argument("PA output power must be positive");
    if (!(pae_fraction > 0.0 && pae_fraction <= 1.0))
        throw std::invalid_argument("PAE must lie in (0, 1]");
    if (!(backoff_db >= 0.0))
        throw std::invalid_argument("PA back-off must be non-negative");
}

double mimolab::adc_power(const AdcSpec &spec)
{
    spec.validate();
    return spec.fom_j_per_cs * spec.sample_rate_hz * std::exp2(spec.enob) * spec.overhead_factor;
}

double mimolab::adc_array_budget(std::uint64_t n_converters, const AdcSpec &spec)
{
    if (n_converters == 0)
        throw std::invalid_argument("At least one converter is required");
    return double(n_converters) * adc_power(spec);
}

double mimolab::pa_dc_power(const PaSpec &spec)
{
    spec.validate();
    return spec.avg_output_power_w / spec.pae_fraction;
}

double mimolab::per_antenna_output_power(std::uint64_t n_antennas, double total_radiated_power_w)
{
    if (n_antennas == 0)
        throw std::invalid_argument("At least one antenna is required");
    if (!(total_radiated_power_w > 0.0))
        throw std::invalid_argument("Total radiated power must be positive");
    return total_radiated_power_w / double(n_antennas);
}

double mimolab::array_pa_budget(std::uint64_t n_antennas, double total_radiated_power_w, double pae_fraction)
{
    const PaSpec unit{per_antenna_output_power(n_antennas, total_radiated_power_w), pae_fraction, 0.0};
    return double(n_antennas) * pa_dc_power(unit);
}

mimolab::BudgetReport mimolab::adc_report(std::string component, std::uint64_t n_converters, const AdcSpec &spec)
{
    return {std::move(component), n_converters, adc_power(spec), adc_array_budget(n_converters, spec)};
}

mimolab::BudgetReport mimolab::pa_report(std::string component, std::uint64_t n_antennas, double total_radiated_power_w,
                                         double pae_fraction)
{
    const PaSpec unit{per_antenna_output_power(n_antennas, total_radiated_power_w), pae_fraction, 0.0};
    return {std::move(component), n_antennas, pa_dc_power(unit), array_pa_budget(n_antennas, total_radiated_power_w, pae_fraction)};
}
