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

#ifndef mimolab_capacity_H
#define mimolab_capacity_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mimolab
{
    // Number of samples tau_c = round(T_c B_c) over which the channel is constant
    class CoherenceBlock
    {
    public:
        CoherenceBlock(double coherence_time_s, double coherence_bandwidth_hz);

        double coherence_time_s() const { return time_s_; }
        double coherence_bandwidth_hz() const { return bandwidth_hz_; }
        std::uint64_t samples() const { return samples_; }

    private:
        double time_s_;
        double bandwidth_hz_;
        std::uint64_t samples_;
    };

    struct CapacityScenario
    {
        double carrier_hz = 3e9;
        double bandwidth_hz = 50e6;
        std::uint64_t m_antennas = 100000;
        double ul_pilot_snr = 100.0;     // Linear, per receive antenna
        double dl_ul_power_ratio = 100.0; // rho_dl / rho_ul
        CoherenceBlock block{0.1, 400e3};

        double dl_snr() const { return dl_ul_power_ratio * ul_pilot_snr; }
        void validate() const;
    };

    // How the uplink SNR of a reference setup is carried over to another carrier/bandwidth at fixed
    // transmit power.
    enum class UlSnrScaling
    {
        none,              // Same SNR
        bandwidth,         // Noise power grows with bandwidth: rho * B_ref / B
        bandwidth_aperture // Additionally fixed-gain antennas lose (f_ref / f)^2 of effective area
    };

    std::string to_string(UlSnrScaling scaling);
    std::optional<UlSnrScaling> parse_ul_snr_scaling(const std::string &name);

    double scaled_ul_snr(double reference_snr, double reference_bandwidth_hz, double reference_carrier_hz,
                         double bandwidth_hz, double carrier_hz, UlSnrScaling scaling);

    // 3 GHz, 50 MHz, M = 100,000, 20 dB uplink SNR, 100x downlink power, 100 ms x 400 kHz block
    CapacityScenario central_park_3ghz();

    // 60 GHz, 1 GHz, M = 100,000, SNR scaled from the 3 GHz setup, 5 ms x 400 kHz block
    CapacityScenario central_park_60ghz(UlSnrScaling scaling = UlSnrScaling::bandwidth);

    struct RatePoint
    {
        std::uint64_t k_users = 0;
        std::uint64_t tau_p = 0;     // Pilot samples, one orthogonal pilot per user
        double pilot_fraction = 0.0; // tau_p / tau_c
        double sinr = 0.0;
        double se_per_ue = 0.0;       // bit/s/Hz
        double rate_per_ue_bps = 0.0;
        double sum_rate_bps = 0.0;
    };

    // MMSE estimation quality tau_p rho / (1 + tau_p rho)
    double estimation_quality(double tau_p, double rho_ul);

    // Downlink MRT SINR with equal power split: M gamma (rho_dl / K) / (1 + rho_dl), gamma = estimation_quality(K, rho_ul)
    double dl_sinr_mrt(const CapacityScenario &scenario, std::uint64_t k_users);

    // (1 - K / tau_c) log2(1 + SINR)
    double dl_se_mrt(const CapacityScenario &scenario, std::uint64_t k_users);

    RatePoint sum_rate(const CapacityScenario &scenario, std::uint64_t k_users);

    // K = 1, 1 + step, 1 + 2 step, ... <= tau_c with step max(1, tau_c / 1000), or step 1 if fine
    std::vector<std::uint64_t> default_k_grid(std::uint64_t tau_c, bool fine = false);

    // Maximises the sum rate over the grid; ties go to the smaller K
    RatePoint optimize_users(const CapacityScenario &scenario, const std::vector<std::uint64_t> &k_grid);

    struct AntennaSweepPoint
    {
        std::uint64_t m_antennas;
        RatePoint best;
    };

    // Per-M optimum over k_grid, ordered by M
    std::vector<AntennaSweepPoint> antenna_sweep(const CapacityScenario &scenario, std::vector<std::uint64_t> m_grid,
                                                 const std::vector<std::uint64_t> &k_grid);

    // CSV header "m_antennas,k_users,pilot_fraction,se_per_ue,rate_per_ue_bps,sum_rate_bps"
    void write_csv_header(std::ostream &os);
    void write_csv_row(std::ostream &os, std::uint64_t m_antennas, const RatePoint &point);
}

#endif
