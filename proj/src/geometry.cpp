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

#include "mimolab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace
{
    void require_positive_frequency(double frequency_hz)
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw std::invalid_argument("Frequency must be positive, got " + std::to_string(frequency_hz));
    }
}

mimolab::PlanarArray::PlanarArray(arma::uword rows, arma::uword cols, double spacing_m, double design_frequency_hz)
    : rows_(rows), cols_(cols), spacing_m_(spacing_m), design_frequency_hz_(design_frequency_hz)
{
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("PlanarArray needs at least one row and one column");
    if (!(spacing_m > 0.0) || !std::isfinite(spacing_m))
        throw std::invalid_argument("PlanarArray element spacing must be positive");
    require_positive_frequency(design_frequency_hz);
}

mimolab::PlanarArray mimolab::PlanarArray::half_wavelength_at(arma::uword rows, arma::uword cols, double design_frequency_hz)
{
    require_positive_frequency(design_frequency_hz);
    return PlanarArray(rows, cols, speed_of_light / (2.0 * design_frequency_hz), design_frequency_hz);
}

mimolab::Direction::Direction(double azimuth_rad, double elevation_rad)
    : azimuth_(azimuth_rad), elevation_(elevation_rad)
{
    constexpr double pi = std::numbers::pi;
    if (!(azimuth_rad > -pi && azimuth_rad <= pi))
        throw std::invalid_argument("Azimuth must lie in (-pi, pi], got " + std::to_string(azimuth_rad));
    if (!(elevation_rad >= -pi / 2.0 && elevation_rad <= pi / 2.0))
        throw std::invalid_argument("Elevation must lie in [-pi/2, pi/2], got " + std::to_string(elevation_rad));
}

double mimolab::Direction::horizontal_cosine() const
{
    return std::sin(azimuth_) * std::cos(elevation_);
}

double mimolab::Direction::vertical_cosine() const
{
    return std::sin(elevation_);
}

mimolab::MultipathChannel::MultipathChannel(std::vector<Path> paths) : paths_(std::move(paths))
{
    if (paths_.empty())
        throw std::invalid_argument("MultipathChannel needs at least one path");
    if (!(total_power() > 0.0))
        throw std::invalid_argument("MultipathChannel total path power must be positive");
}

double mimolab::MultipathChannel::total_power() const
{
    double p = 0.0;
    for (const auto &path : paths_)
        p += std::norm(path.gain);
    return p;
}

mimolab::ArrayResponse mimolab::array_response(const PlanarArray &array, const Direction &dir, double frequency_hz)
{
    require_positive_frequency(frequency_hz);

    const double scale = 2.0 * std::numbers::pi * frequency_hz / speed_of_light * array.spacing_m();
    const double k_h = dir.horizontal_cosine();
    const double k_v = dir.vertical_cosine();

    const arma::uword rows = array.rows(), cols = array.cols();
    ArrayResponse out{cvec(rows * cols), frequency_hz};
    std::complex<double> *p = out.entries.memptr();
    for (arma::uword m = 0; m < rows; ++m)
        for (arma::uword n = 0; n < cols; ++n)
        {
            const double phase = scale * (double(n) * k_h + double(m) * k_v);
            *p++ = {std::cos(phase), std::sin(phase)};
        }
    return out;
}

mimolab::cvec mimolab::channel_vector(const PlanarArray &array, const MultipathChannel &channel, double frequency_hz)
{
    cvec h(array.element_count(), arma::fill::zeros);
    for (const auto &path : channel.paths())
        h += path.gain * array_response(array, path.direction, frequency_hz).entries;
    return h;
}
