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

#include "riscoh/geometry.hpp"
#include "riscoh/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace
{
    bool finite(const riscoh::Position3D &p)
    {
        return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
    }
}

double riscoh::dot(const Position3D &a, const Position3D &b) noexcept
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double riscoh::norm(const Position3D &a) noexcept
{
    return std::sqrt(dot(a, a));
}

std::pair<std::size_t, std::size_t> riscoh::near_square_grid(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("RIS element count must be at least 1.");

    std::size_t rows = 1;
    for (std::size_t r = 1; r * r <= n; ++r)
        if (n % r == 0)
            rows = r;
    return {rows, n / rows};
}

riscoh::RisLayout::RisLayout(Position3D center, std::size_t element_count, double element_spacing)
    : center_(center), spacing_(element_spacing)
{
    auto [r, c] = near_square_grid(element_count);
    rows_ = r;
    cols_ = c;
    if (!finite(center))
        throw std::invalid_argument("RIS center must have finite coordinates.");
    if (!(element_spacing > 0.0) || !std::isfinite(element_spacing))
        throw std::invalid_argument("RIS element spacing must be positive.");
}

riscoh::RisLayout::RisLayout(Position3D center, std::size_t rows, std::size_t cols, double element_spacing)
    : center_(center), rows_(rows), cols_(cols), spacing_(element_spacing)
{
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("RIS grid dimensions must be positive.");
    if (!finite(center))
        throw std::invalid_argument("RIS center must have finite coordinates.");
    if (!(element_spacing > 0.0) || !std::isfinite(element_spacing))
        throw std::invalid_argument("RIS element spacing must be positive.");
}

std::vector<riscoh::Position3D> riscoh::element_positions(const RisLayout &layout)
{
    const double row_mid = 0.5 * double(layout.rows() - 1);
    const double col_mid = 0.5 * double(layout.cols() - 1);
    const double s = layout.element_spacing();

    std::vector<Position3D> out;
    out.reserve(layout.element_count());
    for (std::size_t r = 0; r < layout.rows(); ++r)
        for (std::size_t c = 0; c < layout.cols(); ++c)
            out.push_back(layout.center() + Position3D{(double(c) - col_mid) * s, (double(r) - row_mid) * s, 0.0});
    return out;
}

riscoh::LosVector riscoh::los_vector(const Position3D &point, const RisLayout &layout, double wavelength, double amplitude)
{
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw std::invalid_argument("Wavelength must be positive.");
    if (!finite(point))
        throw std::invalid_argument("Position must have finite coordinates.");

    const Position3D d = point - layout.center();
    const double dist = norm(d);
    if (dist == 0.0)
        throw std::invalid_argument("Position coincides with the RIS center; direction is undefined.");
    const Position3D u{d.x / dist, d.y / dist, d.z / dist};

    const double k0 = 2.0 * pi / wavelength;
    LosVector v;
    v.reserve(layout.element_count());
    for (const auto &p : element_positions(layout))
        v.push_back(std::polar(amplitude, -k0 * dot(u, p - layout.center())));
    return v;
}

double riscoh::compute_eta(std::span<const std::complex<double>> g, std::span<const std::complex<double>> h)
{
    if (g.size() != h.size())
        throw std::invalid_argument("LOS vectors must have equal length.");

    std::complex<double> inner = 0.0;
    double g2 = 0.0, h2 = 0.0;
    for (std::size_t n = 0; n < g.size(); ++n)
    {
        inner += g[n] * h[n];
        g2 += std::norm(g[n]);
        h2 += std::norm(h[n]);
    }
    if (g2 == 0.0 || h2 == 0.0)
        throw std::invalid_argument("LOS vectors must be nonzero.");

    // Rounding can push the ratio a few ulp above 1
    return std::clamp(std::norm(inner) / (g2 * h2), 0.0, 1.0);
}

double riscoh::resolved_spacing(const GeometryConfig &cfg) noexcept
{
    return cfg.element_spacing > 0.0 ? cfg.element_spacing : 0.5 * cfg.wavelength;
}

double riscoh::eta_for(const GeometryConfig &cfg, std::size_t n)
{
    const RisLayout layout(cfg.ris_center, n, resolved_spacing(cfg));
    const auto g = los_vector(cfg.tx, layout, cfg.wavelength);
    const auto h = los_vector(cfg.rx, layout, cfg.wavelength);
    return compute_eta(g, h);
}

std::vector<riscoh::EtaPoint> riscoh::eta_sweep(const GeometryConfig &cfg, std::span<const std::size_t> n_list)
{
    if (n_list.empty())
        throw std::invalid_argument("Element count list must not be empty.");
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw std::invalid_argument("Element count list must be ascending.");

    std::vector<EtaPoint> out;
    out.reserve(n_list.size());
    for (auto n : n_list)
        out.push_back({n, eta_for(cfg, n)});
    return out;
}
