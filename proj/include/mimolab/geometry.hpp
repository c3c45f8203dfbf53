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

#ifndef mimolab_geometry_H
#define mimolab_geometry_H

#include <armadillo>
#include <complex>
#include <vector>

namespace mimolab
{
    inline constexpr double speed_of_light = 299792458.0; // m/s

    using cvec = arma::cx_vec;

    inline double wavelength(double frequency_hz) { return speed_of_light / frequency_hz; }

    // Uniform planar array of isotropic elements. Element positions are fixed in meters, so the
    // electrical spacing grows with the evaluation frequency.
    class PlanarArray
    {
    public:
        PlanarArray(arma::uword rows, arma::uword cols, double spacing_m, double design_frequency_hz);

        // Spacing of c / (2 f) at design frequency f
        static PlanarArray half_wavelength_at(arma::uword rows, arma::uword cols, double design_frequency_hz);

        arma::uword rows() const { return rows_; }
        arma::uword cols() const { return cols_; }
        arma::uword element_count() const { return rows_ * cols_; }
        double spacing_m() const { return spacing_m_; }
        double design_frequency_hz() const { return design_frequency_hz_; }

    private:
        arma::uword rows_;
        arma::uword cols_;
        double spacing_m_;
        double design_frequency_hz_;
    };

    // Angles measured from the array boresight; azimuth in (-pi, pi], elevation in [-pi/2, pi/2]
    class Direction
    {
    public:
        Direction(double azimuth_rad, double elevation_rad);

        double azimuth_rad() const { return azimuth_; }
        double elevation_rad() const { return elevation_; }

        double horizontal_cosine() const; // sin(az) cos(el)
        double vertical_cosine() const;   // sin(el)

    private:
        double azimuth_;
        double elevation_;
    };

    struct ArrayResponse
    {
        cvec entries;        // Unit-modulus entries, row-major over the element grid
        double frequency_hz; // Evaluation frequency
    };

    struct Path
    {
        std::complex<double> gain; // Frequency-flat complex amplitude
        Direction direction;
    };

    // Non-empty list of paths with positive total power
    class MultipathChannel
    {
    public:
        explicit MultipathChannel(std::vector<Path> paths);

        const std::vector<Path> &paths() const { return paths_; }
        double total_power() const;

    private:
        std::vector<Path> paths_;
    };

    // Array response a(dir, f). Element (m, n), m the row and n the column, has phase
    //   2 pi (f / c) spacing (n k_h + m k_v),  k_h = sin(az) cos(el), k_v = sin(el)
    // with element (0, 0) as phase reference. Entries are stored at index m * cols + n.
    ArrayResponse array_response(const PlanarArray &array, const Direction &dir, double frequency_hz);

    // h(f) = sum_l g_l a(dir_l, f)
    cvec channel_vector(const PlanarArray &array, const MultipathChannel &channel, double frequency_hz);
}

#endif
