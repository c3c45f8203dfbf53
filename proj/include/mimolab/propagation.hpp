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

#ifndef mimolab_propagation_H
#define mimolab_propagation_H

#include <cstdint>
#include <string>
#include <vector>

namespace mimolab
{
    // A point at distances d1 and d2 from the two ends of a link
    class LinkGeometry
    {
    public:
        LinkGeometry(double d1_m, double d2_m, double frequency_hz);

        double d1_m() const { return d1_; }
        double d2_m() const { return d2_; }
        double frequency_hz() const { return frequency_hz_; }

    private:
        double d1_;
        double d2_;
        double frequency_hz_;
    };

    // First Fresnel zone radius sqrt(lambda d1 d2 / (d1 + d2)) in meters
    double fresnel_radius(const LinkGeometry &geom);

    // Fixed-gain antennas have an effective area proportional to lambda^2; fixed-area antennas have
    // gain 4 pi A / lambda^2.
    class AntennaSpec
    {
    public:
        enum class Mode
        {
            fixed_gain,
            fixed_area
        };

        static AntennaSpec fixed_gain(double gain_linear);
        static AntennaSpec fixed_area(double area_m2);

        Mode mode() const { return mode_; }
        double value() const { return value_; }
        double gain_at(double wavelength_m) const;

    private:
        AntennaSpec(Mode mode, double value) : mode_(mode), value_(value) {}

        Mode mode_;
        double value_;
    };

    // Friis: P_r = P_t G_t G_r (lambda / (4 pi d))^2
    double friis_rx_power(double p_tx_w, const AntennaSpec &tx, const AntennaSpec &rx, double distance_m,
                          double frequency_hz);

    // SNR change in dB when the bandwidth grows by bandwidth_ratio >= 1 at fixed transmit power
    double bandwidth_snr_delta_db(double bandwidth_ratio);

    struct EstimationLoadSpec
    {
        std::uint64_t m_antennas = 0;
        std::uint64_t k_users = 0;
        std::uint64_t n_subcarriers = 0;
        std::uint64_t subcarriers_per_block = 0;
        double coherence_time_s = 0.0;

        void validate() const;
    };

    struct EstimationLoad
    {
        std::uint64_t n_coefficients = 0; // M K ceil(n_subcarriers / subcarriers_per_block)
        double estimates_per_second = 0.0;
    };

    EstimationLoad estimation_load(const EstimationLoadSpec &spec);

    // Additive dB ledger of a link budget. Entries are user supplied (e.g. oxygen absorption, window loss).
    struct LinkBudget
    {
        struct Entry
        {
            std::string label;
            double db;
        };

        std::vector<Entry> entries;

        void add(std::string label, double db) { entries.push_back({std::move(label), db}); }
        double total_db() const;
    };

    double to_db(double linear);
    double from_db(double db);
}

#endif
