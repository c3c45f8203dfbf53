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

#ifndef mimolab_channels_H
#define mimolab_channels_H

#include "mimolab/geometry.hpp"
#include "mimolab/random.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mimolab
{
    struct IidRayleigh
    {
    };

    // Deterministic multipath channel evaluated at a fixed frequency
    struct LosPlusReflections
    {
        PlanarArray array;
        MultipathChannel channel;
        double frequency_hz;
    };

    class RandomChannelSpec
    {
    public:
        using Model = std::variant<IidRayleigh, LosPlusReflections>;

        static RandomChannelSpec iid_rayleigh(arma::uword m_antennas, std::uint64_t seed);
        static RandomChannelSpec los_plus_reflections(LosPlusReflections model, std::uint64_t seed);

        const Model &model() const { return model_; }
        arma::uword m_antennas() const { return m_antennas_; }
        std::uint64_t seed() const { return seed_; }
        std::string model_name() const;

    private:
        RandomChannelSpec(Model model, arma::uword m_antennas, std::uint64_t seed);

        Model model_;
        arma::uword m_antennas_;
        std::uint64_t seed_;
    };

    // One channel realisation using the given generator state
    cvec sample_channel(const RandomChannelSpec &spec, Rng &rng);

    // One channel realisation from Rng(spec.seed())
    cvec sample_channel(const RandomChannelSpec &spec);

    // Sample std(||h||^2) / mean(||h||^2) over n_draws realisations; draw d uses child_seed(seed, d).
    // Population value for i.i.d. Rayleigh is 1 / sqrt(M).
    double hardening_metric(const RandomChannelSpec &spec, std::size_t n_draws);

    // |a^H b| / (||a|| ||b||)
    double normalized_correlation(const cvec &a, const cvec &b);

    // Mean normalized correlation over n_pairs independent pairs (draws 2p and 2p + 1)
    double favorable_propagation_metric(const RandomChannelSpec &spec, std::size_t n_pairs);

    // ---------------------------------------------------------------------------------------------
    // Gain loss of a fixed beam when the user moves a fraction mu of the wavelength

    class DriftScenario
    {
    public:
        // Every |phase_fractions[m]| <= mu, mu in [0, 1/8]
        DriftScenario(double mu, std::vector<double> phase_fractions);

        arma::uword m_antennas() const { return phase_fractions_.size(); }
        double mu() const { return mu_; }
        const std::vector<double> &phase_fractions() const { return phase_fractions_; }

    private:
        double mu_;
        std::vector<double> phase_fractions_;
    };

    // |sum_m exp(j 2 pi phi_m)|^2 / M
    double drift_gain(const DriftScenario &scenario);
    double drift_gain(const std::vector<double> &phase_fractions);

    // M cos^2(2 pi mu)
    double drift_gain_bound(arma::uword m_antennas, double mu);

    struct DriftBoundReport
    {
        arma::uword m_antennas = 0;
        double mu = 0.0;
        double min_observed_gain = 0.0;
        double max_observed_gain = 0.0;
        double bound = 0.0;            // M cos^2(2 pi mu)
        std::size_t n_patterns = 0;    // Random draws plus the three extreme patterns
        std::size_t violations = 0;    // Patterns below the bound (beyond 1e-9 M rounding slack)

        bool holds() const { return violations == 0 && bound >= m_antennas / 2.0 * (1.0 - 1e-12); }
    };

    // Evaluates the all +mu, all -mu and alternating +-mu patterns plus n_random_draws patterns with
    // phi_m ~ U[-mu, mu] (draw d uses child_seed(seed, d)). Throws std::invalid_argument for mu > 1/8.
    DriftBoundReport drift_bound_check(arma::uword m_antennas, double mu, std::size_t n_random_draws, std::uint64_t seed);
}

#endif
