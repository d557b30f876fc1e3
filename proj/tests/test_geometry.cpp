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

#include "oracles.hpp"
#include "riscoh/numeric.hpp"
#include "riscoh/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace riscoh;
using cd = std::complex<double>;

namespace
{
    // |sum_n exp(-j k (u_t + u_r) . p_n)|^2 / N^2 with p_n enumerated independently
    double eta_direct(Position3D tx, Position3D rx, Position3D c, std::size_t rows, std::size_t cols, double lambda, double d)
    {
        auto unit = [&](Position3D p)
        {
            const double x = p.x - c.x, y = p.y - c.y, z = p.z - c.z;
            const double r = std::sqrt(x * x + y * y + z * z);
            return std::array<double, 3>{x / r, y / r, z / r};
        };
        const auto ut = unit(tx), ur = unit(rx);
        const double k = 2.0 * oracle::pi / lambda;
        cd s = 0.0;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t q = 0; q < cols; ++q)
            {
                const double px = (double(q) - 0.5 * double(cols - 1)) * d;
                const double py = (double(r) - 0.5 * double(rows - 1)) * d;
                s += std::exp(cd(0.0, -k * ((ut[0] + ur[0]) * px + (ut[1] + ur[1]) * py)));
            }
        const double n = double(rows * cols);
        return std::norm(s) / (n * n);
    }
}

TEST_SUITE("geometry")
{
    TEST_CASE("near-square factorization")
    {
        CHECK(near_square_grid(1) == std::pair<std::size_t, std::size_t>{1, 1});
        CHECK(near_square_grid(6) == std::pair<std::size_t, std::size_t>{2, 3});
        CHECK(near_square_grid(100) == std::pair<std::size_t, std::size_t>{10, 10});
        CHECK(near_square_grid(7) == std::pair<std::size_t, std::size_t>{1, 7});
        CHECK_THROWS_AS(near_square_grid(0), std::invalid_argument);
        for (std::size_t n = 1; n <= 300; ++n)
        {
            const auto [r, c] = near_square_grid(n);
            REQUIRE(r * c == n);
            REQUIRE(r <= c);
        }
    }

    TEST_CASE("element positions")
    {
        const Position3D c{1.0, -2.0, 5.0};
        SUBCASE("single element sits at the center")
        {
            const auto p = element_positions(RisLayout(c, 1, 0.1));
            REQUIRE(p.size() == 1);
            CHECK(p[0] == c);
        }
        SUBCASE("2x2 grid at half-spacing offsets")
        {
            const double s = 0.2;
            const auto p = element_positions(RisLayout(c, 4, s));
            REQUIRE(p.size() == 4);
            for (const auto &q : p)
            {
                CHECK(std::abs(std::abs(q.x - c.x) - s / 2) < 1e-15);
                CHECK(std::abs(std::abs(q.y - c.y) - s / 2) < 1e-15);
                CHECK(q.z == c.z);
            }
        }
        SUBCASE("mean of positions is the center")
        {
            for (std::size_t n : {2, 6, 9, 12, 35, 100, 101})
            {
                const RisLayout layout(c, n, 0.05);
                const auto p = element_positions(layout);
                REQUIRE(p.size() == n);
                Position3D m{};
                for (const auto &q : p)
                    m = m + q;
                CHECK(m.x / double(n) == doctest::Approx(c.x).epsilon(1e-14));
                CHECK(m.y / double(n) == doctest::Approx(c.y).epsilon(1e-14));
                CHECK(m.z / double(n) == doctest::Approx(c.z).epsilon(1e-14));
            }
        }
        SUBCASE("6 elements form a 2x3 lattice")
        {
            const RisLayout layout(c, 6, 1.0);
            CHECK(layout.rows() == 2);
            CHECK(layout.cols() == 3);
        }
        SUBCASE("invalid layouts")
        {
            CHECK_THROWS_AS(RisLayout(c, 0, 0.1), std::invalid_argument);
            CHECK_THROWS_AS(RisLayout(c, 4, 0.0), std::invalid_argument);
            CHECK_THROWS_AS(RisLayout(c, 2, 0, 0.1), std::invalid_argument);
        }
    }

    TEST_CASE("los_vector")
    {
        const Position3D c{0, 0, 5};
        const RisLayout layout(c, 16, 0.05);
        SUBCASE("broadside point gives equal entries")
        {
            const auto v = los_vector({0, 0, 20}, layout, 0.1, 2.0);
            for (const auto &e : v)
                CHECK(std::abs(e - cd(2.0, 0.0)) < 1e-14);
        }
        SUBCASE("single element has the requested modulus")
        {
            const auto v = los_vector({-10, 0, 0}, RisLayout(c, 1, 0.05), 0.1, 0.7);
            REQUIRE(v.size() == 1);
            CHECK(std::abs(v[0]) == doctest::Approx(0.7));
        }
        SUBCASE("oblique point gives constant modulus and varying phase")
        {
            const auto v = los_vector({-10, 0, 0}, layout, 0.1);
            double spread = 0.0;
            for (const auto &e : v)
            {
                CHECK(std::abs(e) == doctest::Approx(1.0).epsilon(1e-14));
                spread = std::max(spread, std::abs(std::arg(e) - std::arg(v[0])));
            }
            CHECK(spread > 0.1);
        }
        SUBCASE("errors")
        {
            CHECK_THROWS_AS(los_vector(c, layout, 0.1), std::invalid_argument);
            CHECK_THROWS_AS(los_vector({1, 0, 0}, layout, 0.0), std::invalid_argument);
        }
    }

    TEST_CASE("compute_eta basics")
    {
        const std::vector<cd> a{1, 1}, b{1, -1};
        CHECK(compute_eta(a, a) == doctest::Approx(1.0));
        CHECK(compute_eta(a, b) == doctest::Approx(0.0));
        const std::vector<cd> z{0, 0}, shorter{1};
        CHECK_THROWS_AS(compute_eta(a, z), std::invalid_argument);
        CHECK_THROWS_AS(compute_eta(a, shorter), std::invalid_argument);
    }

    TEST_CASE("compute_eta is bounded and scale invariant on random vectors")
    {
        std::mt19937_64 rng(3);
        std::normal_distribution<double> nd;
        for (int t = 0; t < 2000; ++t)
        {
            const std::size_t n = 1 + rng() % 40;
            std::vector<cd> g(n), h(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                g[i] = {nd(rng), nd(rng)};
                h[i] = {nd(rng), nd(rng)};
            }
            const double e = compute_eta(g, h);
            REQUIRE(e >= 0.0);
            REQUIRE(e <= 1.0);

            const cd c1{nd(rng), nd(rng)}, c2{nd(rng), nd(rng)};
            auto gs = g, hs = h;
            for (auto &x : gs)
                x *= c1;
            for (auto &x : hs)
                x *= c2;
            REQUIRE(compute_eta(gs, hs) == doctest::Approx(e).epsilon(1e-10).scale(1.0));
        }
    }

    TEST_CASE("symmetric receiver gives eta = 1 for every N")
    {
        GeometryConfig cfg;
        for (std::size_t n = 1; n <= 256; ++n)
            REQUIRE(std::abs(eta_for(cfg, n) - 1.0) < 1e-12);
    }

    TEST_CASE("eta agrees with a direct plane-wave evaluation")
    {
        GeometryConfig cfg;
        for (Position3D rx : {Position3D{15, 0, 0}, Position3D{10, 2, 0}, Position3D{10, 10, 0}})
        {
            cfg.rx = rx;
            for (std::size_t n : {1, 2, 6, 16, 35, 100, 144, 256})
            {
                const auto [r, c] = near_square_grid(n);
                const double expect = eta_direct(cfg.tx, cfg.rx, cfg.ris_center, r, c, cfg.wavelength, cfg.wavelength / 2);
                CHECK(eta_for(cfg, n) == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
            }
        }
    }

    TEST_CASE("eta_sweep")
    {
        GeometryConfig cfg;
        std::vector<std::size_t> ns;
        for (std::size_t n = 1; n <= 64; ++n)
            ns.push_back(n);

        SUBCASE("symmetric receiver: constant 1")
        {
            for (const auto &pt : eta_sweep(cfg, ns))
                CHECK(pt.eta == doctest::Approx(1.0).epsilon(1e-12));
        }
        SUBCASE("off-axis receiver oscillates")
        {
            cfg.rx = {10, 10, 0};
            const auto pts = eta_sweep(cfg, ns);
            int ups = 0, downs = 0;
            for (std::size_t i = 1; i < pts.size(); ++i)
            {
                ups += pts[i].eta > pts[i - 1].eta + 1e-6;
                downs += pts[i].eta < pts[i - 1].eta - 1e-6;
            }
            CHECK(ups > 3);
            CHECK(downs > 3);
        }
        SUBCASE("N = 1 gives 1 for any positions")
        {
            cfg.rx = {3, -7, 1};
            cfg.tx = {-2, 9, -4};
            const std::vector<std::size_t> one{1};
            CHECK(eta_sweep(cfg, one)[0].eta == doctest::Approx(1.0));
        }
        SUBCASE("list validation")
        {
            const std::vector<std::size_t> empty, unsorted{4, 2};
            CHECK_THROWS_AS(eta_sweep(cfg, empty), std::invalid_argument);
            CHECK_THROWS_AS(eta_sweep(cfg, unsorted), std::invalid_argument);
        }
    }

    TEST_CASE("explicit spacing overrides half wavelength")
    {
        GeometryConfig cfg;
        CHECK(resolved_spacing(cfg) == doctest::Approx(cfg.wavelength / 2));
        cfg.element_spacing = 0.01;
        CHECK(resolved_spacing(cfg) == 0.01);
    }
}
