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

#include "mimolab/hardware.hpp"

#include <cmath>

using namespace mimolab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("adc_power - Walden model")
{
    AdcSpec spec{30e-15, 5.0, 100e6, 1.0};
    CHECK_THAT(adc_power(spec), WithinRel(96e-6, 1e-12));

    const double p5 = adc_power(spec);
    spec.enob = 4.0;
    CHECK(adc_power(spec) == p5 / 2.0);

    spec.enob = 5.0;
    for (double overhead : {2.0, 3.0, 4.0})
    {
        spec.overhead_factor = overhead;
        CHECK_THAT(adc_power(spec), WithinRel(overhead * p5, 1e-15));
    }

    spec.overhead_factor = 1.0;
    spec.sample_rate_hz = 300e6;
    CHECK_THAT(adc_power(spec), WithinRel(3.0 * p5, 1e-15));
}

TEST_CASE("adc_power - validation")
{
    CHECK_THROWS_AS(adc_power({0.0, 5.0, 1e8, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(adc_power({30e-15, 0.5, 1e8, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(adc_power({30e-15, 5.0, 1e8, 0.9}), std::invalid_argument);
    CHECK_THROWS_AS(adc_power({30e-15, 5.0, 1e8, 11.0}), std::invalid_argument);
}

TEST_CASE("adc_array_budget - many low-resolution vs few high-resolution converters")
{
    const AdcSpec low{30e-15, 5.0, 100e6, 2.0}, high{30e-15, 10.0, 100e6, 2.0};
    CHECK(adc_array_budget(1, low) == adc_power(low));
    CHECK(adc_array_budget(128, low) / adc_array_budget(8, high) == 0.5);
    CHECK(adc_array_budget(256, low) / adc_array_budget(8, high) == 1.0);
    CHECK_THROWS_AS(adc_array_budget(0, low), std::invalid_argument);
}

TEST_CASE("pa_dc_power")
{
    CHECK_THAT(pa_dc_power({0.25, 0.18, 6.0}), WithinAbs(1.389, 1e-3));
    CHECK_THAT(pa_dc_power({0.25, 0.10, 6.0}), WithinRel(2.5, 1e-12));
    CHECK(pa_dc_power({0.25, 1.0, 0.0}) == 0.25);
    CHECK_THROWS_AS(pa_dc_power({0.25, 0.0, 6.0}), std::invalid_argument);
    CHECK_THROWS_AS(pa_dc_power({0.25, 1.2, 6.0}), std::invalid_argument);
    CHECK_THROWS_AS(pa_dc_power({0.25, 0.2, -1.0}), std::invalid_argument);

    for (double pae : {0.05, 0.18, 0.5, 1.0})
        CHECK(pa_dc_power({0.7, pae, 0.0}) >= 0.7);
}

TEST_CASE("array_pa_budget - invariant to the number of antennas")
{
    CHECK_THAT(array_pa_budget(1, 1.0, 0.18), WithinAbs(5.56, 5e-3));
    CHECK_THAT(array_pa_budget(1, 1.0, 0.10), WithinRel(10.0, 1e-12));
    for (std::uint64_t n : {1u, 8u, 100u, 1024u})
        CHECK_THAT(array_pa_budget(n, 1.0, 0.18), WithinRel(array_pa_budget(1, 1.0, 0.18), 1e-12));
    CHECK(per_antenna_output_power(100, 1.0) == per_antenna_output_power(1, 1.0) / 100.0);
    CHECK_THROWS_AS(array_pa_budget(0, 1.0, 0.18), std::invalid_argument);
    CHECK_THROWS_AS(array_pa_budget(4, 0.0, 0.18), std::invalid_argument);
}

TEST_CASE("budget reports")
{
    const auto r = adc_report("adc", 128, {30e-15, 5.0, 100e6, 1.0});
    CHECK(r.component == "adc");
    CHECK(r.count == 128);
    CHECK_THAT(r.total_power_w, WithinRel(128.0 * r.unit_power_w, 1e-15));

    const auto pa = pa_report("pa", 64, 2.0, 0.25);
    CHECK_THAT(pa.unit_power_w, WithinRel(2.0 / 64.0 / 0.25, 1e-15));
    CHECK_THAT(pa.total_power_w, WithinRel(8.0, 1e-12));
}
