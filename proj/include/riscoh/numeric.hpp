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

#ifndef RISCOH_NUMERIC_HPP
#define RISCOH_NUMERIC_HPP

#include <cstdint>
#include <numbers>
#include <span>

namespace riscoh
{
    inline constexpr double pi = std::numbers::pi;

    // Unnormalized sinc, sin(x)/x with sinc(0) = 1
    double sinc(double x) noexcept;

    // Kronecker delta on integer lags
    constexpr double kronecker(std::int64_t tau) noexcept { return tau == 0 ? 1.0 : 0.0; }

    // alpha^|tau| with 0^0 = 1
    double lag_power(double alpha, std::int64_t tau) noexcept;

    double db_to_linear(double db) noexcept;
    double linear_to_db(double linear) noexcept;

    // Pairwise (cascade) summation; result depends only on the input order
    double pairwise_sum(std::span<const double> values) noexcept;
}

#endif
