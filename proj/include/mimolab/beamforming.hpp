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

#ifndef mimolab_beamforming_H
#define mimolab_beamforming_H

#include "mimolab/geometry.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace mimolab
{
    enum class BeamformerKind
    {
        analog,  // Unit-modulus phase shifters, one beam for the whole band
        digital, // Unconstrained weights, recomputed per frequency
        hybrid   // Digital superposition of n_rf analog beams
    };

    // Unit-norm transmit weights. A user with channel h receives sum_m w_m h_m.
    struct Beamformer
    {
        cvec weights;
        BeamformerKind kind = BeamformerKind::digital;
        arma::uword n_rf = 0; // Hybrid only
    };

    // Fraction of the maximum beamforming gain, |w^T h|^2 / (||w||^2 ||h||^2)
    double efficiency(const cvec &weights, const cvec &h);
    inline double efficiency(const Beamformer &w, const cvec &h) { return efficiency(w.weights, h); }

    // Maximum ratio transmission: w = conj(h) / ||h||
    Beamformer mrt_weights(const cvec &h);

    // Unit-modulus maximiser of |w^T h_center|: w_m = exp(-j angle(h_m)) / sqrt(M).
    // Zero-magnitude entries get phase 0; their indices are appended to `degenerate_entries` if given.
    Beamformer analog_weights(const cvec &h_center, std::vector<arma::uword> *degenerate_entries = nullptr);

    // Hybrid precoder: an M x n_rf analog bank, an n_rf x K digital layer and the resulting per-user beamformers
    struct HybridPrecoder
    {
        arma::cx_mat analog_bank;
        arma::cx_mat digital;
        std::vector<Beamformer> users;
    };

    // Analog bank for K users: column k is analog_weights(h_k); the remaining n_rf - K columns are the
    // M-point DFT beams with the largest aggregate gain sum_k |f_q^T h_k|^2 (ties to the lower index).
    arma::cx_mat hybrid_analog_bank(const std::vector<cvec> &center_channels, arma::uword n_rf);

    // Digital layer for a fixed analog bank: regularised zero-forcing (eps = 1e-9 trace) on an orthonormal
    // basis of the bank's column span. Each user's weights are normalised and rotated so that h_k^T w_k > 0.
    HybridPrecoder hybrid_precode(const arma::cx_mat &analog_bank, const std::vector<cvec> &channels);

    // hybrid_precode(hybrid_analog_bank(channels, n_rf), channels)
    HybridPrecoder hybrid_weights(const std::vector<cvec> &channels, arma::uword n_rf);

    // ---------------------------------------------------------------------------------------------
    // Beam-squint experiment

    struct SquintCurve
    {
        std::vector<double> frequencies_hz; // Strictly increasing
        std::vector<double> efficiency;     // In [0, 1]
    };

    // Evaluation frequencies f_i = f_center - span/2 + i span/(n_points - 1)
    std::vector<double> sweep_frequencies(double f_center, double span_hz, std::size_t n_points);

    // The beamformer is designed on h(f_center). Analog keeps it for every frequency, hybrid keeps the
    // analog bank (n_rf beams) and redesigns the digital layer, digital redesigns everything.
    SquintCurve squint_sweep(const PlanarArray &array, const MultipathChannel &channel, double f_center,
                             double span_hz, std::size_t n_points,
                             BeamformerKind kind = BeamformerKind::analog, arma::uword n_rf = 1);

    // CSV with header "frequency_hz,efficiency"
    void write_csv(std::ostream &os, const SquintCurve &curve);

    // How the LoS/reflection gain equality is split across the six paths of the squint scenario.
    enum class ReflectionSplit
    {
        amplitude, // |g_LoS| = sum of reflection amplitudes, five equal reflections
        power      // |g_LoS|^2 = 1/2, each reflection power 1/10
    };

    // LoS path at (pi/4, -pi/4) plus five reflections at azimuths pi/6, pi/3, pi/4, pi/4, pi/12 and
    // elevations -pi/5, -pi/5, -pi/6, -pi/12, -pi/6. Path phases are uniform in [0, 2 pi), drawn
    // in path order from Rng(seed).
    MultipathChannel los_with_reflections(std::uint64_t seed = 42, ReflectionSplit split = ReflectionSplit::amplitude);
}

#endif
