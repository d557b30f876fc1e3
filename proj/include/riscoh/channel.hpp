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

#ifndef RISCOH_CHANNEL_HPP
#define RISCOH_CHANNEL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace riscoh
{
    using Complex = std::complex<double>;

    // Complex samples indexed by discrete time k
    using ComplexSeries = std::vector<Complex>;

    // One time-variant Rician coefficient h[k] = los_mean + nlos[k], where the
    // NLOS part is a stationary AR(1) process with parameter `alpha` and power `sigma2`.
    // sigma2 = 0 is accepted and describes a deterministic (LOS-only) coefficient.
    struct RicianParams
    {
        Complex los_mean{0.0, 0.0};
        double alpha = 0.0;
        double sigma2 = 1.0;

        // Throws std::invalid_argument unless 0 <= alpha < 1 and sigma2 >= 0
        void validate() const;
    };

    // Environmental parameters shared by a group of coefficients.
    // kappa is the linear Rice factor.
    struct EnvSet
    {
        double alpha = 0.0;
        double kappa = 1.0;
        double sigma2 = 1.0;

        void validate() const;

        static EnvSet from_db(double alpha, double kappa_db, double sigma2);
    };

    // Coefficient with |los_mean|^2 = kappa * sigma2 and the given LOS phase
    RicianParams rician_from_env(const EnvSet &env, double los_phase = 0.0);

    // Stationary AR(1) path of length K; the first sample is drawn from the
    // stationary law so the whole path is stationary. Deterministic in `seed`.
    ComplexSeries generate_nlos(const RicianParams &params, std::size_t num_samples, std::uint64_t seed);

    // los_mean + generate_nlos(...)
    ComplexSeries generate_rician(const RicianParams &params, std::size_t num_samples, std::uint64_t seed);

    // |los_mean|^2 / sigma2; throws std::domain_error for sigma2 = 0
    double rice_factor(const RicianParams &params);

    // alpha^|tau| * sigma2
    double ar1_acf(double alpha, double sigma2, std::int64_t tau);
}

#endif
