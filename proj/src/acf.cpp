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

#include "riscoh/acf.hpp"
#include "riscoh/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace
{
    constexpr double imag_residue_tol = 1e-10;

    // Second moment E{x[k] x^*[k - tau]} of a single Rician coefficient
    double self_moment(const riscoh::RicianParams &p, std::int64_t tau)
    {
        return std::norm(p.los_mean) + riscoh::ar1_acf(p.alpha, p.sigma2, tau);
    }
}

void riscoh::GeneralScenario::validate() const
{
    if (tx_ris.empty())
        throw std::invalid_argument("Scenario needs at least one RIS element.");
    if (tx_ris.size() != ris_rx.size())
        throw std::invalid_argument("TX-RIS and RIS-RX channel lists differ in length (" + std::to_string(tx_ris.size()) +
                                    " vs " + std::to_string(ris_rx.size()) + ").");
    if (policy.fixed_size() != 0 && policy.fixed_size() != tx_ris.size())
        throw std::invalid_argument("Static policy length does not match the number of RIS elements.");
    if (direct)
        direct->validate();
    for (const auto &p : tx_ris)
        p.validate();
    for (const auto &p : ris_rx)
        p.validate();
}

void riscoh::SimplifiedScenario::validate() const
{
    if (num_elements == 0)
        throw std::invalid_argument("Number of RIS elements must be at least 1.");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("Rice factor must be non-negative and finite.");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("Orthogonality measure eta must lie in [0, 1].");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("AR(1) parameter must lie in [0, 1).");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument("NLOS power must be positive.");
    if (!(g_norm2 > 0.0) || !std::isfinite(g_norm2))
        throw std::invalid_argument("TX-RIS LOS norm must be positive.");
}

riscoh::AcfTerms riscoh::acf_terms(const GeneralScenario &scenario, std::int64_t tau)
{
    scenario.validate();
    const std::size_t N = scenario.element_count();
    const auto &g = scenario.tx_ris;
    const auto &h = scenario.ris_rx;

    AcfTerms out;
    if (scenario.direct)
        out.direct = self_moment(*scenario.direct, tau);

    // S2: sum over (n, m) of E{g_n g_m^*} E{h_n h_m^*} R_psi[n, m, tau]
    Complex s2 = 0.0;
    double scale = 0.0;
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t m = 0; m < N; ++m)
        {
            Complex term;
            if (n == m)
                term = self_moment(g[n], tau) * self_moment(h[n], tau) * ccf_reflection(scenario.policy, n, n, tau);
            else
                term = g[n].los_mean * std::conj(g[m].los_mean) * h[n].los_mean * std::conj(h[m].los_mean) *
                       ccf_reflection(scenario.policy, n, m, tau);
            s2 += term;
            scale += std::abs(term);
        }
    if (std::abs(s2.imag()) > imag_residue_tol * std::max(1.0, scale))
        throw std::logic_error("Cascaded ACF term has a non-negligible imaginary part.");
    out.cascade = s2.real();

    // S3: 2 Re{ hD^* sum_n g_n h_n E{psi_n} }
    if (scenario.direct)
    {
        Complex acc = 0.0;
        for (std::size_t n = 0; n < N; ++n)
            acc += g[n].los_mean * h[n].los_mean * mean_reflection(scenario.policy, n);
        out.cross = 2.0 * (std::conj(scenario.direct->los_mean) * acc).real();
    }
    return out;
}

double riscoh::acf_general(const GeneralScenario &scenario, std::int64_t tau)
{
    return acf_terms(scenario, tau).total();
}

double riscoh::acf_simplified(const SimplifiedScenario &s, double theta, std::int64_t tau)
{
    s.validate();
    if (!(theta >= 0.0 && theta <= pi))
        throw std::invalid_argument("Hopping width theta must lie in [0, pi].");

    const double sc = sinc(theta);
    const double s2 = sc * sc;
    return s.sigma2 * s.g_norm2 *
           ((1.0 - s2) * (s.kappa + 1.0) * kronecker(tau) + s2 * (s.los_product() + lag_power(s.alpha, tau)));
}

double riscoh::corr_coeff_from(double los_product, double kappa, double alpha, double sinc2, std::int64_t tau) noexcept
{
    const double uncorrelated = (1.0 - sinc2) * (kappa + 1.0);
    const double num = uncorrelated * kronecker(tau) + sinc2 * (los_product + lag_power(alpha, tau));
    const double den = uncorrelated + sinc2 * (los_product + 1.0);
    return num / den;
}

double riscoh::corr_coeff(const SimplifiedScenario &s, double theta, std::int64_t tau)
{
    s.validate();
    if (!(theta >= 0.0 && theta <= pi))
        throw std::invalid_argument("Hopping width theta must lie in [0, pi].");
    if (tau == 0)
        return 1.0;
    const double sc = sinc(theta);
    return corr_coeff_from(s.los_product(), s.kappa, s.alpha, sc * sc, tau);
}

std::pair<double, double> riscoh::corr_limits(const SimplifiedScenario &s, std::int64_t tau)
{
    s.validate();
    if (tau == 0)
        return {1.0, 1.0};
    const double a = s.los_product();
    return {0.0, (a + lag_power(s.alpha, tau)) / (a + 1.0)};
}
