// SPDX-License-Identifier: Apache-2.0
//
// riscoh: temporal coherence control toolkit for RIS-aided channels
// Copyright (C) 2026 The riscoh authors
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

#ifndef RISCOH_GEOMETRY_HPP
#define RISCOH_GEOMETRY_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace riscoh
{
    // Cartesian position in meters (right-handed frame)
    struct Position3D
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        friend Position3D operator+(const Position3D &a, const Position3D &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
        friend Position3D operator-(const Position3D &a, const Position3D &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
        friend bool operator==(const Position3D &, const Position3D &) = default;
    };

    double dot(const Position3D &a, const Position3D &b) noexcept;
    double norm(const Position3D &a) noexcept;

    // 3.5 GHz carrier
    inline constexpr double default_wavelength = 299792458.0 / 3.5e9;

    // Planar RIS parallel to the xy-plane. Elements sit on a rows x cols lattice
    // centered at `center`, enumerated row-major (rows along y, columns along x).
    class RisLayout
    {
    public:
        // Near-square grid: rows is the largest divisor of N not exceeding sqrt(N)
        RisLayout(Position3D center, std::size_t element_count, double element_spacing);

        // Explicit grid, rows * cols must equal element_count
        RisLayout(Position3D center, std::size_t rows, std::size_t cols, double element_spacing);

        const Position3D &center() const noexcept { return center_; }
        std::size_t element_count() const noexcept { return rows_ * cols_; }
        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }
        double element_spacing() const noexcept { return spacing_; }

    private:
        Position3D center_;
        std::size_t rows_ = 1;
        std::size_t cols_ = 1;
        double spacing_ = 0.0;
    };

    // Closest-to-square factorization (rows <= cols) of n >= 1
    std::pair<std::size_t, std::size_t> near_square_grid(std::size_t n);

    // Absolute element positions, row-major
    std::vector<Position3D> element_positions(const RisLayout &layout);

    // LOS vector: common modulus, one complex entry per RIS element
    using LosVector = std::vector<std::complex<double>>;

    // Far-field plane-wave steering vector toward `point`:
    //   entry n = amplitude * exp(-j 2pi/wavelength <u, p_n>)
    // with u the unit direction from the RIS center to `point` and p_n the
    // element offset from the center. Throws std::invalid_argument if `point`
    // coincides with the center or the wavelength is not positive.
    LosVector los_vector(const Position3D &point, const RisLayout &layout, double wavelength, double amplitude = 1.0);

    // Orthogonality measure |g^T h|^2 / (|g|^2 |h|^2), in [0, 1]
    double compute_eta(std::span<const std::complex<double>> g, std::span<const std::complex<double>> h);

    struct GeometryConfig
    {
        Position3D tx{-10.0, 0.0, 0.0};
        Position3D rx{10.0, 0.0, 0.0};
        Position3D ris_center{0.0, 0.0, 5.0};
        double wavelength = default_wavelength;
        double element_spacing = 0.0; // <= 0 selects wavelength / 2
    };

    double resolved_spacing(const GeometryConfig &cfg) noexcept;

    // eta for a fresh near-square layout of n elements
    double eta_for(const GeometryConfig &cfg, std::size_t n);

    struct EtaPoint
    {
        std::size_t n = 0;
        double eta = 0.0;
    };

    // Requires a nonempty ascending list of element counts
    std::vector<EtaPoint> eta_sweep(const GeometryConfig &cfg, std::span<const std::size_t> n_list);
}

#endif
