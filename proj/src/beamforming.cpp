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

#include "mimolab/beamforming.hpp"
#include "mimolab/io.hpp"
#include "mimolab/random.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace
{
    using mimolab::cvec;

    void require_nonzero(const cvec &v, const char *what)
    {
        if (v.n_elem == 0 || arma::norm(v) == 0.0)
            throw std::invalid_argument(std::string(what) + " must be a non-zero vector");
    }
}

double mimolab::efficiency(const cvec &weights, const cvec &h)
{
    require_nonzero(h, "Channel");
    require_nonzero(weights, "Beamformer weights");
    if (weights.n_elem != h.n_elem)
        throw std::invalid_argument("Beamformer and channel lengths differ");

    const double gain = std::norm(arma::accu(weights % h));
    const double wn = arma::norm(weights), hn = arma::norm(h);
    return std::clamp(gain / (wn * wn * hn * hn), 0.0, 1.0);
}

mimolab::Beamformer mimolab::mrt_weights(const cvec &h)
{
    require_nonzero(h, "Channel");
    return {arma::conj(h) / arma::norm(h), BeamformerKind::digital, 0};
}

mimolab::Beamformer mimolab::analog_weights(const cvec &h_center, std::vector<arma::uword> *degenerate_entries)
{
    if (h_center.n_elem == 0)
        throw std::invalid_argument("Channel must not be empty");

    const double amplitude = 1.0 / std::sqrt(double(h_center.n_elem));
    cvec w(h_center.n_elem);
    for (arma::uword m = 0; m < h_center.n_elem; ++m)
    {
        const double mag = std::abs(h_center[m]);
        if (mag == 0.0)
        {
            w[m] = amplitude;
            if (degenerate_entries)
                degenerate_entries->push_back(m);
        }
        else
            w[m] = std::conj(h_center[m]) / mag * amplitude;
    }
    return {std::move(w), BeamformerKind::analog, 0};
}

arma::cx_mat mimolab::hybrid_analog_bank(const std::vector<cvec> &center_channels, arma::uword n_rf)
{
    const arma::uword n_users = center_channels.size();
    if (n_users == 0)
        throw std::invalid_argument("Hybrid beamforming needs at least one user");
    const arma::uword m = center_channels.front().n_elem;
    if (n_rf < n_users)
        throw std::invalid_argument("Hybrid beamforming needs n_rf >= K (n_rf = " + std::to_string(n_rf) +
                                    ", K = " + std::to_string(n_users) + ")");
    if (n_rf > m)
        throw std::invalid_argument("Hybrid beamforming needs n_rf <= M");

    arma::cx_mat bank(m, n_rf);
    for (arma::uword k = 0; k < n_users; ++k)
    {
        if (center_channels[k].n_elem != m)
            throw std::invalid_argument("All user channels must have the same length");
        bank.col(k) = analog_weights(center_channels[k]).weights;
    }
    if (n_rf == n_users)
        return bank;

    // f_q^T h = sqrt(M) ifft(h)[q] for the DFT beam f_q[m] = exp(j 2 pi m q / M) / sqrt(M)
    arma::vec score(m, arma::fill::zeros);
    for (const auto &h : center_channels)
        score += arma::square(arma::abs(arma::ifft(h))) * double(m);

    std::vector<arma::uword> order(m);
    std::iota(order.begin(), order.end(), arma::uword(0));
    std::stable_sort(order.begin(), order.end(), [&](arma::uword a, arma::uword b)
                     { return score[a] > score[b]; });

    const double amplitude = 1.0 / std::sqrt(double(m));
    for (arma::uword c = n_users; c < n_rf; ++c)
    {
        const arma::uword q = order[c - n_users];
        for (arma::uword i = 0; i < m; ++i)
        {
            // Reduce the index product mod M before scaling to keep the phase argument small
            const double phase = 2.0 * std::numbers::pi * double((i * q) % m) / double(m);
            bank(i, c) = std::polar(amplitude, phase);
        }
    }
    return bank;
}

mimolab::HybridPrecoder mimolab::hybrid_precode(const arma::cx_mat &analog_bank, const std::vector<cvec> &channels)
{
    const arma::uword n_users = channels.size();
    const arma::uword m = analog_bank.n_rows, n_rf = analog_bank.n_cols;
    if (n_users == 0)
        throw std::invalid_argument("Hybrid beamforming needs at least one user");
    if (n_rf < n_users)
        throw std::invalid_argument("Hybrid beamforming needs n_rf >= K");

    arma::cx_mat h(m, n_users);
    for (arma::uword k = 0; k < n_users; ++k)
    {
        if (channels[k].n_elem != m)
            throw std::invalid_argument("User channel length does not match the analog bank");
        require_nonzero(channels[k], "Channel");
        h.col(k) = channels[k];
    }

    arma::cx_mat u, v;
    arma::vec s;
    if (!arma::svd_econ(u, s, v, analog_bank))
        throw std::runtime_error("SVD of the analog bank failed");
    const double tol = double(std::max(m, n_rf)) * s.max() * std::numeric_limits<double>::epsilon();
    const arma::uword rank = arma::uword(arma::accu(s > tol));
    if (rank == 0)
        throw std::runtime_error("Analog bank has rank zero");
    const arma::cx_mat basis = u.head_cols(rank);

    // Effective channel in basis coordinates, user k sees row k
    const arma::cx_mat g = h.st() * basis;
    arma::cx_mat gram = g * g.t();
    const double eps = 1e-9 * std::real(arma::trace(gram));
    gram.diag() += eps;
    arma::cx_mat gram_inv;
    if (!arma::inv(gram_inv, gram))
        throw std::runtime_error("Regularised zero-forcing inversion failed");
    arma::cx_mat w = basis * (g.t() * gram_inv);

    HybridPrecoder out;
    out.analog_bank = analog_bank;
    out.users.reserve(n_users);
    for (arma::uword k = 0; k < n_users; ++k)
    {
        cvec wk = w.col(k);
        const double wn = arma::norm(wk);
        if (wn == 0.0)
            throw std::runtime_error("User " + std::to_string(k) + " has no component in the analog beam span");
        const std::complex<double> alpha = arma::accu(h.col(k) % wk);
        if (std::abs(alpha) > 0.0)
            wk *= std::conj(alpha) / std::abs(alpha);
        wk /= arma::norm(wk);
        w.col(k) = wk;
        out.users.push_back({std::move(wk), BeamformerKind::hybrid, n_rf});
    }

    // Digital layer in analog-bank coordinates: D = V_r S_r^-1 U_r^H W
    out.digital = v.head_cols(rank) * arma::diagmat(1.0 / s.head(rank)) * (basis.t() * w);
    return out;
}

mimolab::HybridPrecoder mimolab::hybrid_weights(const std::vector<cvec> &channels, arma::uword n_rf)
{
    return hybrid_precode(hybrid_analog_bank(channels, n_rf), channels);
}

std::vector<double> mimolab::sweep_frequencies(double f_center, double span_hz, std::size_t n_points)
{
    if (n_points < 2)
        throw std::invalid_argument("A frequency sweep needs at least 2 points");
    if (!(span_hz > 0.0))
        throw std::invalid_argument("Sweep span must be positive");
    if (!(f_center - span_hz / 2.0 > 0.0))
        throw std::invalid_argument("Sweep must stay at positive frequencies");

    std::vector<double> f(n_points);
    const double step = span_hz / double(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i)
        f[i] = f_center - span_hz / 2.0 + double(i) * step;
    return f;
}

mimolab::SquintCurve mimolab::squint_sweep(const PlanarArray &array, const MultipathChannel &channel, double f_center,
                                           double span_hz, std::size_t n_points, BeamformerKind kind, arma::uword n_rf)
{
    SquintCurve curve;
    curve.frequencies_hz = sweep_frequencies(f_center, span_hz, n_points);
    curve.efficiency.assign(n_points, 0.0);

    const cvec h_center = channel_vector(array, channel, f_center);
    const Beamformer analog = analog_weights(h_center);
    arma::cx_mat bank;
    if (kind == BeamformerKind::hybrid)
        bank = hybrid_analog_bank({h_center}, n_rf);

    detail::parallel_for(n_points, [&](std::size_t i)
                         {
                             const cvec h = channel_vector(array, channel, curve.frequencies_hz[i]);
                             switch (kind)
                             {
                             case BeamformerKind::analog:
                                 curve.efficiency[i] = efficiency(analog, h);
                                 break;
                             case BeamformerKind::hybrid:
                                 curve.efficiency[i] = efficiency(hybrid_precode(bank, {h}).users.front(), h);
                                 break;
                             case BeamformerKind::digital:
                                 curve.efficiency[i] = efficiency(mrt_weights(h), h);
                                 break;
                             } });
    return curve;
}

void mimolab::write_csv(std::ostream &os, const SquintCurve &curve)
{
    os << "frequency_hz,efficiency\n";
    for (std::size_t i = 0; i < curve.frequencies_hz.size(); ++i)
        os << format_double(curve.frequencies_hz[i]) << ',' << format_double(curve.efficiency[i]) << '\n';
}

mimolab::MultipathChannel mimolab::los_with_reflections(std::uint64_t seed, ReflectionSplit split)
{
    constexpr double pi = std::numbers::pi;
    const double azimuth[6] = {pi / 4, pi / 6, pi / 3, pi / 4, pi / 4, pi / 12};
    const double elevation[6] = {-pi / 4, -pi / 5, -pi / 5, -pi / 6, -pi / 12, -pi / 6};

    double los_amplitude = 1.0, reflection_amplitude = 0.2;
    if (split == ReflectionSplit::power)
    {
        los_amplitude = std::sqrt(0.5);
        reflection_amplitude = std::sqrt(0.1);
    }

    Rng rng(seed);
    std::vector<Path> paths;
    for (int l = 0; l < 6; ++l)
    {
        const double phase = 2.0 * pi * rng.uniform();
        paths.push_back({std::polar(l == 0 ? los_amplitude : reflection_amplitude, phase), Direction(azimuth[l], elevation[l])});
    }
    return MultipathChannel(std::move(paths));
}
