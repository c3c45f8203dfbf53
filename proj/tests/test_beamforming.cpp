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

#include "catch_amalgamated.hpp"

#include "mimolab/beamforming.hpp"
#include "mimolab/random.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace mimolab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    constexpr double pi = std::numbers::pi;

    cvec random_vector(Rng &rng, arma::uword n)
    {
        cvec v(n);
        for (auto &x : v)
            x = rng.complex_normal();
        return v;
    }

    MultipathChannel random_multipath(Rng &rng, int n_paths)
    {
        std::vector<Path> paths;
        for (int l = 0; l < n_paths; ++l)
            paths.push_back({std::polar(rng.uniform(0.1, 1.0), rng.uniform(0.0, 2 * pi)),
                             Direction(rng.uniform(-1.4, 1.4), rng.uniform(-1.2, 1.2))});
        return MultipathChannel(std::move(paths));
    }
}

TEST_CASE("efficiency - basic values and errors")
{
    const cvec h = {{1.0, 0.0}, {0.0, 1.0}};
    const cvec null_w = {{1.0, 0.0}, {0.0, 1.0}};    // w^T h = 1 + j j = 0
    const cvec matched = {{0.0, 1.0}, {1.0, 0.0}};   // w^T h = 2j
    CHECK_THAT(efficiency(null_w, h), WithinAbs(0.0, 1e-15));
    CHECK_THAT(efficiency(matched, h), WithinAbs(1.0, 1e-15));

    CHECK_THROWS_AS(efficiency(h, cvec(2, arma::fill::zeros)), std::invalid_argument);
    CHECK_THROWS_AS(efficiency(cvec(2, arma::fill::zeros), h), std::invalid_argument);
    CHECK_THROWS_AS(efficiency(cvec(3, arma::fill::ones), h), std::invalid_argument);
}

TEST_CASE("mrt_weights - matched filter")
{
    const cvec e1 = {1.0, 0.0, 0.0, 0.0};
    const auto w = mrt_weights(e1);
    CHECK(w.kind == BeamformerKind::digital);
    CHECK(arma::approx_equal(w.weights, e1, "absdiff", 0.0));

    Rng rng(3);
    for (int i = 0; i < 100; ++i)
    {
        const cvec h = random_vector(rng, 1 + arma::uword(rng.uniform() * 64));
        const auto b = mrt_weights(h);
        CHECK_THAT(arma::norm(b.weights), WithinAbs(1.0, 1e-12));
        CHECK_THAT(efficiency(b, h), WithinAbs(1.0, 1e-12));
    }
    CHECK_THROWS_AS(mrt_weights(cvec(3, arma::fill::zeros)), std::invalid_argument);
}

TEST_CASE("analog_weights - unit modulus and matched to LoS")
{
    const auto a = PlanarArray::half_wavelength_at(8, 8, 28e9);
    const cvec h = 0.3 * array_response(a, Direction(0.5, -0.2), 28e9).entries;
    const auto w = analog_weights(h);
    CHECK(w.kind == BeamformerKind::analog);
    CHECK(arma::max(arma::abs(arma::abs(w.weights) - 1.0 / 8.0)) < 1e-12);
    CHECK_THAT(arma::norm(w.weights), WithinAbs(1.0, 1e-12));
    CHECK_THAT(efficiency(w, h), WithinAbs(1.0, 1e-12));
}

TEST_CASE("analog_weights - equal magnitude channel with random phases")
{
    Rng rng(5);
    cvec h(50);
    for (auto &x : h)
        x = std::polar(2.5, rng.uniform(0.0, 2 * pi));
    CHECK_THAT(efficiency(analog_weights(h), h), WithinAbs(1.0, 1e-12));
}

TEST_CASE("analog_weights - zero entries get phase 0 and are reported")
{
    const cvec h = {{1.0, 1.0}, {0.0, 0.0}, {0.0, -2.0}};
    std::vector<arma::uword> degenerate;
    const auto w = analog_weights(h, &degenerate);
    REQUIRE(degenerate.size() == 1);
    CHECK(degenerate[0] == 1);
    CHECK_THAT(w.weights[1].real(), WithinAbs(1.0 / std::sqrt(3.0), 1e-15));
    CHECK(w.weights[1].imag() == 0.0);
}

TEST_CASE("analog_weights - no unit-modulus perturbation does better")
{
    Rng rng(17);
    const cvec h = random_vector(rng, 64);
    const auto w = analog_weights(h);
    const double best = std::abs(arma::accu(w.weights % h));
    for (int i = 0; i < 1000; ++i)
    {
        cvec p = w.weights;
        const double scale = rng.uniform(1e-3, 1.0);
        for (auto &x : p)
            x *= std::polar(1.0, scale * rng.uniform(-pi, pi));
        CHECK(std::abs(arma::accu(p % h)) <= best * (1.0 + 1e-12));
    }
}

TEST_CASE("analog_weights - six-path scenario at the centre frequency")
{
    const auto a = PlanarArray::half_wavelength_at(64, 64, 60e9);
    const cvec h = channel_vector(a, los_with_reflections(42), 60e9);
    const double eff = efficiency(analog_weights(h), h);
    CHECK(eff > 0.85);
    CHECK(eff < 0.95);
}

TEST_CASE("hybrid_weights - reductions")
{
    Rng rng(23);
    const auto a = PlanarArray::half_wavelength_at(4, 4, 28e9);
    const cvec h = channel_vector(a, random_multipath(rng, 4), 28e9);

    // All RF chains: the analog bank spans the whole space
    const auto full = hybrid_weights({h}, 16);
    CHECK_THAT(efficiency(full.users[0], h), WithinAbs(1.0, 1e-9));

    // One RF chain: same as the analog beamformer
    const auto single = hybrid_weights({h}, 1);
    const auto analog = analog_weights(h);
    CHECK(arma::norm(single.users[0].weights - analog.weights) < 1e-12);
    CHECK(single.users[0].kind == BeamformerKind::hybrid);
    CHECK(single.users[0].n_rf == 1);
}

TEST_CASE("hybrid_weights - weights lie in the analog span and match bank * digital")
{
    Rng rng(29);
    const auto a = PlanarArray::half_wavelength_at(6, 6, 28e9);
    std::vector<cvec> hs;
    for (int k = 0; k < 3; ++k)
        hs.push_back(channel_vector(a, random_multipath(rng, 3), 28e9));
    const auto p = hybrid_weights(hs, 5);
    REQUIRE(p.analog_bank.n_cols == 5);
    REQUIRE(p.digital.n_rows == 5);
    REQUIRE(p.digital.n_cols == 3);
    CHECK(arma::max(arma::abs(arma::vectorise(arma::abs(p.analog_bank)) - 1.0 / 6.0)) < 1e-12);

    const arma::cx_mat rebuilt = p.analog_bank * p.digital;
    for (arma::uword k = 0; k < 3; ++k)
    {
        CHECK_THAT(arma::norm(p.users[k].weights), WithinAbs(1.0, 1e-12));
        CHECK(arma::norm(rebuilt.col(k) - p.users[k].weights) < 1e-9);
        // Effective gain is rotated to the positive real axis
        const auto g = arma::accu(hs[k] % p.users[k].weights);
        CHECK(g.real() > 0.0);
        CHECK(std::abs(g.imag()) < 1e-12 * std::abs(g));
    }
}

TEST_CASE("hybrid_weights - two separated LoS users on a 16x16 array")
{
    const double fc = 28e9;
    const auto a = PlanarArray::half_wavelength_at(16, 16, fc);
    const cvec h1 = array_response(a, Direction(pi / 4, 0.0), fc).entries;
    const cvec h2 = array_response(a, Direction(-pi / 4, 0.0), fc).entries;
    for (arma::uword n_rf : {2u, 4u})
    {
        const auto p = hybrid_weights({h1, h2}, n_rf);
        CHECK(efficiency(p.users[0], h1) >= 0.95);
        CHECK(efficiency(p.users[1], h2) >= 0.95);
        CHECK(std::norm(arma::accu(p.users[0].weights % h2)) / std::pow(arma::norm(h2), 2) <= 1e-2);
        CHECK(std::norm(arma::accu(p.users[1].weights % h1)) / std::pow(arma::norm(h1), 2) <= 1e-2);
    }
}

TEST_CASE("hybrid_weights - errors and near-collinear users")
{
    const cvec h = {1.0, 2.0, 3.0, 4.0};
    CHECK_THROWS_AS(hybrid_weights({h, h}, 1), std::invalid_argument);
    CHECK_THROWS_AS(hybrid_weights({h}, 5), std::invalid_argument);
    CHECK_THROWS_AS(hybrid_weights({}, 1), std::invalid_argument);

    // Identical users make the effective channel rank deficient; the regulariser keeps it finite
    const auto p = hybrid_weights({h, h}, 2);
    for (const auto &u : p.users)
        CHECK(u.weights.is_finite());
}

TEST_CASE("efficiency - scale invariance and range")
{
    Rng rng(31);
    for (int i = 0; i < 200; ++i)
    {
        const cvec h = random_vector(rng, 16), w = random_vector(rng, 16);
        const double e = efficiency(w, h);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
        const std::complex<double> c = std::polar(rng.uniform(0.01, 100.0), rng.uniform(0.0, 2 * pi));
        CHECK_THAT(efficiency(w, cvec(c * h)), WithinAbs(e, 1e-12));
    }
}

TEST_CASE("Digital >= hybrid >= analog across frequency")
{
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial)
    {
        const arma::uword rows = 2 + arma::uword(rng.uniform() * 5), cols = 2 + arma::uword(rng.uniform() * 5);
        const double fc = rng.uniform(3e9, 80e9);
        const auto a = PlanarArray::half_wavelength_at(rows, cols, fc);
        const auto chan = random_multipath(rng, 1 + int(rng.uniform() * 5));
        const arma::uword n_rf = 1 + arma::uword(rng.uniform() * double(a.element_count()));

        const cvec hc = channel_vector(a, chan, fc);
        const auto analog = analog_weights(hc);
        const auto bank = hybrid_analog_bank({hc}, n_rf);
        const double f = fc * rng.uniform(0.9, 1.1);
        const cvec h = channel_vector(a, chan, f);

        const double e_analog = efficiency(analog, h);
        const double e_hybrid = efficiency(hybrid_precode(bank, {h}).users[0], h);
        const double e_digital = efficiency(mrt_weights(h), h);
        CHECK(e_digital >= e_hybrid - 1e-12);
        CHECK(e_hybrid >= e_analog - 1e-12);
    }
}

TEST_CASE("sweep_frequencies - grid")
{
    const auto f = sweep_frequencies(60e9, 2e9, 5);
    REQUIRE(f.size() == 5);
    CHECK(f.front() == 59e9);
    CHECK(f[2] == 60e9);
    CHECK(f.back() == 61e9);
    CHECK_THROWS_AS(sweep_frequencies(60e9, 2e9, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep_frequencies(60e9, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(sweep_frequencies(1e9, 4e9, 5), std::invalid_argument);
}

TEST_CASE("squint_sweep - single LoS path is matched only at the centre")
{
    const auto a = PlanarArray::half_wavelength_at(16, 16, 60e9);
    const MultipathChannel los({{1.0, Direction(pi / 4, -pi / 4)}});
    const auto curve = squint_sweep(a, los, 60e9, 4e9, 41);
    REQUIRE(curve.efficiency.size() == 41);
    CHECK_THAT(curve.efficiency[20], WithinAbs(1.0, 1e-12));
    CHECK(curve.efficiency.front() < 1.0 - 1e-6);
    CHECK(curve.efficiency.back() < 1.0 - 1e-6);
    for (std::size_t i = 1; i < curve.frequencies_hz.size(); ++i)
        CHECK(curve.frequencies_hz[i] > curve.frequencies_hz[i - 1]);
}

TEST_CASE("squint_sweep - digital is flat at one")
{
    const auto a = PlanarArray::half_wavelength_at(16, 16, 60e9);
    const auto curve = squint_sweep(a, los_with_reflections(42), 60e9, 2e9, 11, BeamformerKind::digital);
    for (double e : curve.efficiency)
        CHECK_THAT(e, WithinAbs(1.0, 1e-12));
}

TEST_CASE("squint_sweep - six-path scenario over 400 MHz and 2 GHz")
{
    const auto chan = los_with_reflections(42);
    double min_2ghz[2] = {};
    int idx = 0;
    for (arma::uword n : {32u, 64u, 128u})
    {
        const auto a = PlanarArray::half_wavelength_at(n, n, 60e9);
        const auto narrow = squint_sweep(a, chan, 60e9, 400e6, 21);
        for (double e : narrow.efficiency)
        {
            CHECK(e >= 0.80);
            CHECK(e <= 0.95);
        }
        if (n != 64)
        {
            const auto wide = squint_sweep(a, chan, 60e9, 2e9, 41);
            min_2ghz[idx++] = *std::min_element(wide.efficiency.begin(), wide.efficiency.end());
        }
    }
    CHECK(min_2ghz[0] >= 0.75);
    CHECK(min_2ghz[1] < min_2ghz[0]);
}

TEST_CASE("squint_sweep - evaluation is deterministic")
{
    const auto a = PlanarArray::half_wavelength_at(8, 8, 60e9);
    const auto c1 = squint_sweep(a, los_with_reflections(7), 60e9, 1e9, 33);
    const auto c2 = squint_sweep(a, los_with_reflections(7), 60e9, 1e9, 33);
    CHECK(c1.efficiency == c2.efficiency);
}

TEST_CASE("los_with_reflections - gain split")
{
    const auto amp = los_with_reflections(1, ReflectionSplit::amplitude);
    REQUIRE(amp.paths().size() == 6);
    double refl_amp = 0.0;
    for (std::size_t l = 1; l < 6; ++l)
        refl_amp += std::abs(amp.paths()[l].gain);
    CHECK_THAT(std::abs(amp.paths()[0].gain), WithinRel(refl_amp, 1e-12));

    const auto pow = los_with_reflections(1, ReflectionSplit::power);
    CHECK_THAT(std::norm(pow.paths()[0].gain), WithinRel(pow.total_power() - std::norm(pow.paths()[0].gain), 1e-12));
    CHECK_THAT(pow.total_power(), WithinRel(1.0, 1e-12));

    // Phases depend on the seed only
    CHECK(los_with_reflections(1).paths()[3].gain == amp.paths()[3].gain);
    CHECK(los_with_reflections(2).paths()[3].gain != amp.paths()[3].gain);
}

TEST_CASE("write_csv - header and round-trip precision")
{
    SquintCurve c{{59.9e9, 60e9}, {0.1 + 0.2, 1.0}};
    std::ostringstream os;
    write_csv(os, c);
    CHECK(os.str() == "frequency_hz,efficiency\n5.99e+10,0.30000000000000004\n6e+10,1\n");
}
