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

#ifndef mimolab_hardware_H
#define mimolab_hardware_H

#include <cstdint>
#include <string>

namespace mimolab
{
    // Walden-style converter model: P = FoM f_s 2^ENOB overhead
    struct AdcSpec
    {
        double fom_j_per_cs = 30e-15; // Energy per conversion step
        double enob = 5.0;
        double sample_rate_hz = 100e6;
        double overhead_factor = 1.0; // Regulators, buffering, calibration; in [1, 10]

        void validate() const;
    };

    struct PaSpec
    {
        double avg_output_power_w = 0.25;
        double pae_fraction = 0.18; // Used as net output/DC efficiency
        double backoff_db = 6.0;    // Annotation only

        void validate() const;
    };

    double adc_power(const AdcSpec &spec);
    double adc_array_budget(std::uint64_t n_converters, const AdcSpec &spec);

    double pa_dc_power(const PaSpec &spec);

    // Total DC power of n PAs sharing a fixed total radiated power; equals total / PAE for any n
    double array_pa_budget(std::uint64_t n_antennas, double total_radiated_power_w, double pae_fraction);
    double per_antenna_output_power(std::uint64_t n_antennas, double total_radiated_power_w);

    struct BudgetReport
    {
        std::string component;
        std::uint64_t count = 0;
        double unit_power_w = 0.0;
        double total_power_w = 0.0;
    };

    BudgetReport adc_report(std::string component, std::uint64_t n_converters, const AdcSpec &spec);
    BudgetReport pa_report(std::string component, std::uint64_t n_antennas, double total_radiated_power_w,
                           double pae_fraction);
}

#endif
