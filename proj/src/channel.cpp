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

#include "riscoh/channel.hpp"
#include "riscoh/numeric.hpp"
#include "riscoh/rng.hpp"

#include <cmath>
#include <stdexcept>

void riscoh::RicianParams::validate() const
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("AR(1) parameter must lie in [0, 1).");
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument("NLOS power must be non-negative and finite.");
    if (!std::isfinite(los_mean.real()) || !std::isfinite(los_mean.imag()))
        throw std::invalid_argument("LOS mean must be finite.");
}

void riscoh::EnvSet::validate() const
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("AR(1) parameter must lie in [0, 1).");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("Rice factor must be non-negative and finite.");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument("NLOS power must be positive and finite.");
}

riscoh::EnvSet riscoh::EnvSet::from_db(double alpha, double kappa_db, double sigma2)
{
    EnvSet env{alpha, db_to_linear(kappa_db), sigma2};
    env.validate();
    return env;
}

riscoh::RicianParams riscoh::rician_from_env(const EnvSet &env, double los_phase)
{
    env.validate();
    return {std::polar(std::sqrt(env.kappa * env.sigma2), los_phase), env.alpha, env.sigma2};
}

riscoh::ComplexSeries riscoh::generate_nlos(const RicianParams &params, std::size_t num_samples, std::uint64_t seed)
{
    params.validate();
    if (num_samples == 0)
        throw std::invalid_argument("Number of samples must be at least 1.");

    ComplexSeries out(num_samples);
    if (params.sigma2 == 0.0)
        return out;

    Stream rng(seed);
    const double sigma = std::sqrt(params.sigma2);
    const double innovation = std::sqrt(1.0 - params.alpha * params.alpha) * sigma;

    out[0] = sigma * rng.complex_normal();
    for (std::size_t k = 1; k < num_samples; ++k)
        out[k] = params.alpha * out[k - 1] + innovation * rng.complex_normal();
    return out;
}

riscoh::ComplexSeries riscoh::generate_rician(const RicianParams &params, std::size_t num_samples, std::uint64_t seed)
{
    auto out = generate_nlos(params, num_samples, seed);
    for (auto &v : out)
        v += params.los_mean;
    return out;
}

double riscoh::rice_factor(const RicianParams &params)
{
    if (!(params.sigma2 > 0.0))
        throw std::domain_error("Rice factor is undefined for zero NLOS power.");
    return std::norm(params.los_mean) / params.sigma2;
}

double riscoh::ar1_acf(double alpha, double sigma2, std::int64_t tau)
{
    return lag_power(alpha, tau) * sigma2;
}
