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

#include "mimolab/channels.hpp"

#include "parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

mimolab::RandomChannelSpec::RandomChannelSpec(Model model, arma::uword m_antennas, std::uint64_t seed)
    : model_(std::move(model)), m_antennas_(m_antennas), seed_(seed)
{
    if (m_antennas_ == 0)
        throw std::invalid_argument("A channel needs at least one antenna");
}

mimolab::RandomChannelSpec mimolab::RandomChannelSpec::iid_rayleigh(arma::uword m_antennas, std::uint64_t seed)
{
    return RandomChannelSpec(IidRayleigh{}, m_antennas, seed);
}

mimolab::RandomChannelSpec mimolab::RandomChannelSpec::los_plus_reflections(LosPlusReflections model, std::uint64_t seed)
{
    if (!(model.frequency_hz > 0.0))
        throw std::invalid_argument("Frequency must be positive");
    const arma::uword m = model.array.element_count();
    return RandomChannelSpec(std::move(model), m, seed);
}

std::string mimolab::RandomChannelSpec::model_name() const
{
    return std::holds_alternative<IidRayleigh>(model_) ? "iid_rayleigh" : "los_plus_reflections";
}

mimolab::cvec mimolab::sample_channel(const RandomChannelSpec &spec, Rng &rng)
{
    if (const auto *los = std::get_if<LosPlusReflections>(&spec.model()))
        return channel_vector(los->array, los->channel, los->frequency_hz);

    cvec h(spec.m_antennas());
    for (auto &x : h)
        x = rng.complex_normal();
    return h;
}

mimolab::cvec mimolab::sample_channel(const RandomChannelSpec &spec)
{
    Rng rng(spec.seed());
    return sample_channel(spec, rng);
}

double mimolab::hardening_metric(const RandomChannelSpec &spec, std::size_t n_draws)
{
    if (n_draws < 2)
        throw std::invalid_argument("hardening_metric needs at least 2 draws");

    std::vector<double> power(n_draws);
    detail::parallel_for(n_draws, [&](std::size_t d)
                         {
                             Rng rng(child_seed(spec.seed(), d));
                             const cvec h = sample_channel(spec, rng);
                             const double n = arma::norm(h);
                             power[d] = n * n; });

    double mean = 0.0;
    for (double p : power)
        mean += p;
    mean /= double(n_draws);

    double var = 0.0;
    for (double p : power)
        var += (p - mean) * (p - mean);
    var /= double(n_draws - 1);
    return std::sqrt(var) / mean;
}

double mimolab::normalized_correlation(const cvec &a, const cvec &b)
{
    if (a.n_elem != b.n_elem)
        throw std::invalid_argument("Vectors must have equal length");
    const double na = arma::norm(a), nb = arma::norm(b);
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("Correlation of a zero vector is undefined");
    return std::abs(arma::cdot(a, b)) / (na * nb);
}

double mimolab::favorable_propagation_metric(const RandomChannelSpec &spec, std::size_t n_pairs)
{
    if (n_pairs == 0)
        throw std::invalid_argument("favorable_propagation_metric needs at least one pair");

    std::vector<double> corr(n_pairs);
    detail::parallel_for(n_pairs, [&](std::size_t p)
                         {
                             Rng rng_a(child_seed(spec.seed(), 2 * p));
                             Rng rng_b(child_seed(spec.seed(), 2 * p + 1));
                             corr[p] = normalized_correlation(sample_channel(spec, rng_a), sample_channel(spec, rng_b)); });

    double sum = 0.0;
    for (double c : corr)
        sum += c;
    return sum / double(n_pairs);
}

mimolab::DriftScenario::DriftScenario(double mu, std::vector<double> phase_fractions)
    : mu_(mu), phase_fractions_(std::move(phase_fractions))
{
    if (!(mu >= 0.0 && mu <= 0.125))
        throw std::invalid_argument("Drift fraction mu must lie in [0, 1/8], got " + std::to_string(mu));
    if (phase_fractions_.empty())
        throw std::invalid_argument("DriftScenario needs at least one antenna");
    for (double phi : phase_fractions_)
        if (!(std::abs(phi) <= mu))
            throw std::invalid_argument("Phase fraction " + std::to_string(phi) + " exceeds mu");
}

double mimolab::drift_gain(const std::vector<double> &phase_fractions)
{
    if (phase_fractions.empty())
        throw std::invalid_argument("drift_gain needs at least one antenna");
    std::complex<double> sum = 0.0;
    for (double phi : phase_fractions)
        sum += std::polar(1.0, 2.0 * std::numbers::pi * phi);
    return std::norm(sum) / double(phase_fractions.size());
}

double mimolab::drift_gain(const DriftScenario &scenario)
{
    return drift_gain(scenario.phase_fractions());
}

double mimolab::drift_gain_bound(arma::uword m_antennas, double mu)
{
    const double c = std::cos(2.0 * std::numbers::pi * mu);
    return double(m_antennas) * c * c;
}

mimolab::DriftBoundReport mimolab::drift_bound_check(arma::uword m_antennas, double mu, std::size_t n_random_draws,
                                                     std::uint64_t seed)
{
    if (mu > 0.125)
        throw std::invalid_argument("The drift bound only applies for mu <= 1/8");
    if (!(mu >= 0.0))
        throw std::invalid_argument("Drift fraction mu must be non-negative");
    if (m_antennas == 0)
        throw std::invalid_argument("Drift check needs at least one antenna");

    const std::size_t n_extreme = 3;
    std::vector<double> gains(n_extreme + n_random_draws);

    std::vector<double> phi(m_antennas);
    std::fill(phi.begin(), phi.end(), mu);
    gains[0] = drift_gain(phi);
    std::fill(phi.begin(), phi.end(), -mu);
    gains[1] = drift_gain(phi);
    for (arma::uword m = 0; m < m_antennas; ++m)
        phi[m] = (m % 2 == 0) ? mu : -mu;
    gains[2] = drift_gain(phi);

    detail::parallel_for(n_random_draws, [&](std::size_t d)
                         {
                             Rng rng(child_seed(seed, d));
                             std::vector<double> draw(m_antennas);
                             for (auto &x : draw)
                                 x = rng.uniform(-mu, mu);
                             gains[n_extreme + d] = drift_gain(draw); });

    DriftBoundReport report;
    report.m_antennas = m_antennas;
    report.mu = mu;
    report.bound = drift_gain_bound(m_antennas, mu);
    report.n_patterns = gains.size();
    report.min_observed_gain = gains.front();
    report.max_observed_gain = gains.front();
    const double slack = 1e-9 * double(m_antennas);
    for (double g : gains)
    {
        report.min_observed_gain = std::min(report.min_observed_gain, g);
        report.max_observed_gain = std::max(report.max_observed_gain, g);
        if (g < report.bound - slack)
            ++report.violations;
    }
    return report;
}
