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
#include "riscoh/rng.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace riscoh;

TEST_SUITE("numeric")
{
    TEST_CASE("mix64 reproduces the SplitMix64 reference sequence")
    {
        // First outputs of SplitMix64 seeded with 0 and with 1234567
        CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
        CHECK(mix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
        CHECK(mix64(1234567) == 6457827717110365317ULL);
    }

    TEST_CASE("derive_seed separates tags and their order")
    {
        std::set<std::uint64_t> seen;
        for (std::uint64_t t = 0; t < 1000; ++t)
            seen.insert(derive_seed(7, {stream_tag::nlos, t}));
        CHECK(seen.size() == 1000);
        CHECK(derive_seed(7, {1, 2}) != derive_seed(7, {2, 1}));
        CHECK(derive_seed(7, {1}) != derive_seed(8, {1}));
        CHECK(derive_seed(7, {1, 2}) == derive_seed(7, {1, 2}));
    }

    TEST_CASE("counter_uniform is uniform on [0, 1) and addressable")
    {
        std::vector<double> u;
        for (std::uint64_t k = 0; k < 200; ++k)
            for (std::uint64_t n = 0; n < 500; ++n)
            {
                const double v = counter_uniform(99, k, n);
                REQUIRE(v >= 0.0);
                REQUIRE(v < 1.0);
                u.push_back(v);
            }
        // KS critical value at the 0.1% level is 1.95 / sqrt(n)
        CHECK(oracle::ks_uniform(u, 0.0, 1.0) < 1.95 / std::sqrt(double(u.size())));
        CHECK(counter_uniform(99, 3, 4) == counter_uniform(99, 3, 4));
        CHECK(counter_uniform(99, 3, 4) != counter_uniform(99, 4, 3));
    }

    TEST_CASE("Stream draws are reproducible and CN(0, 1)")
    {
        Stream a(5), b(5);
        for (int i = 0; i < 10; ++i)
            CHECK(a.complex_normal() == b.complex_normal());

        Stream s(11);
        const int n = 200000;
        std::complex<double> mean = 0.0;
        double power = 0.0, pseudo = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const auto z = s.complex_normal();
            mean += z;
            power += std::norm(z);
            pseudo += (z * z).real();
        }
        CHECK(std::abs(mean / double(n)) < 4.0 / std::sqrt(double(n)));
        CHECK(power / n == doctest::Approx(1.0).epsilon(0.01));
        CHECK(std::abs(pseudo / n) < 0.01);

        for (int i = 0; i < 1000; ++i)
        {
            const double v = s.uniform();
            REQUIRE(v >= 0.0);
            REQUIRE(v < 1.0);
        }
    }

    TEST_CASE("sinc and lag_power edge values")
    {
        CHECK(sinc(0.0) == 1.0);
        CHECK(std::abs(sinc(pi)) < 1e-16);
        CHECK(sinc(pi / 2) == doctest::Approx(2.0 / pi).epsilon(1e-15));
        CHECK(sinc(-1.0) == sinc(1.0));
        CHECK(lag_power(0.0, 0) == 1.0);
        CHECK(lag_power(0.0, 3) == 0.0);
        CHECK(lag_power(0.5, -3) == 0.125);
        CHECK(kronecker(0) == 1.0);
        CHECK(kronecker(-2) == 0.0);
    }

    TEST_CASE("dB conversion round trip")
    {
        CHECK(db_to_linear(0.0) == 1.0);
        CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
        CHECK(db_to_linear(-6.0) == doctest::Approx(0.2512).epsilon(1e-3));
        for (double db = -60.0; db <= 30.0; db += 7.5)
            CHECK(linear_to_db(db_to_linear(db)) == doctest::Approx(db).epsilon(1e-12));
    }

    TEST_CASE("pairwise_sum matches exact sums and beats naive accumulation")
    {
        CHECK(pairwise_sum({}) == 0.0);
        std::vector<double> ints(1000);
        for (int i = 0; i < 1000; ++i)
            ints[i] = i + 1;
        CHECK(pairwise_sum(ints) == 500500.0);

        std::vector<double> tenths(1 << 20, 0.1);
        double naive = 0.0;
        for (double v : tenths)
            naive += v;
        const double exact = 0.1 * double(tenths.size());
        CHECK(std::abs(pairwise_sum(tenths) - exact) < std::abs(naive - exact));
        CHECK(std::abs(pairwise_sum(tenths) - exact) < 1e-9 * exact);
    }
}
