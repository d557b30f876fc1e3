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

#include "riscoh/numeric.hpp"

#include <cmath>
#include <cstdlib>

double riscoh::sinc(double x) noexcept
{
    if (x == 0.0)
        return 1.0;
    return std::sin(x) / x;
}

double riscoh::lag_power(double alpha, std::int64_t tau) noexcept
{
    const auto m = std::llabs(tau);
    if (m == 0)
        return 1.0;
    return std::pow(alpha, double(m));
}

double riscoh::db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

double riscoh::linear_to_db(double linear) noexcept
{
    return 10.0 * std::log10(linear);
}

double riscoh::pairwise_sum(std::span<const double> values) noexcept
{
    constexpr std::size_t leaf = 64;
    if (values.size() <= leaf)
    {
        double s = 0.0;
        for (double v : values)
            s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}
