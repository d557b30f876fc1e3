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

#include "riscoh/design.hpp"
#include "riscoh/acf.hpp"
#include "riscoh/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace
{
    void check_env(double kappa, double eta, double alpha)
    {
        if (!(kappa >= 0.0) || !std::isfinite(kappa))
            throw std::invalid_argument("Rice factor must be non-negative and finite.");
        if (!(eta >= 0.0 && eta <= 1.0))
            throw std::invalid_argument("Orthogonality measure eta must lie in [0, 1].");
        if (!(alpha >= 0.0 && alpha < 1.0))
            throw std::invalid_argument("AR(1) parameter must lie in [0, 1).");
    }

    double sinc2_checked(double theta)
    {
        if (!(theta >= 0.0 && theta <= riscoh::pi))
            throw std::invalid_argument("Hopping width theta must lie in [0, pi].");
        const double s = riscoh::sinc(theta);
        return s * s;
    }

    // Correlation at lag tau for an RIS of n elements (theta fixed through sinc2)
    double rho_for_n(double n, double kappa, double eta, double alpha, double sinc2, std::int64_t tau)
    {
        return riscoh::corr_coeff_from(n * kappa * eta, kappa, alpha, sinc2, tau);
    }

    constexpr std::uint64_t max_design_n = std::uint64_t(1) << 52;
}

void riscoh::ProjectRequirement::validate() const
{
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("Target correlation must lie in [0, 1].");
    if (tau < 1)
        throw std::invalid_argument("Target lag must be a positive integer.");
}

double riscoh::inv_sinc(double y)
{
    if (!(y >= 0.0 && y <= 1.0))
        throw std::domain_error("inv_sinc argument must lie in [0, 1].");
    if (y == 1.0)
        return 0.0;
    if (y == 0.0)
        return pi;

    // sinc decreases strictly on [0, pi]; 60 halvings reach a width of pi * 2^-60
    double lo = 0.0, hi = pi;
    for (int i = 0; i < 60; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (sinc(mid) > y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

riscoh::FeasibilityReport riscoh::feasible_theta(const ProjectRequirement &p, std::size_t num_elements, double kappa, double eta, double alpha)
{
    p.validate();
    check_env(kappa, eta, alpha);
    if (num_elements == 0)
        throw std::invalid_argument("Number of RIS elements must be at least 1.");

    const double a = double(num_elements) * kappa * eta;
    const double bound = (a + lag_power(alpha, p.tau)) / (a + 1.0);
    return {p.rho <= bound, bound};
}

double riscoh::design_theta(const ProjectRequirement &p, std::size_t num_elements, double kappa, double eta, double alpha)
{
    const auto report = feasible_theta(p, num_elements, kappa, eta, alpha);
    if (!report.feasible)
    {
        std::ostringstream msg;
        msg << "Requirement rho = " << p.rho << " at tau = " << p.tau << " exceeds the reachable correlation " << report.bound << ".";
        throw InfeasibleRequirement(msg.str(), report.bound);
    }
    if (p.rho == 0.0)
        return pi;

    const double a = double(num_elements) * kappa * eta;
    const double arg = (kappa + 1.0) * p.rho / (p.rho * kappa + (1.0 - p.rho) * a + lag_power(alpha, p.tau));
    // At the feasibility boundary rounding may leave arg a few ulp above 1
    const double theta = inv_sinc(std::sqrt(std::clamp(arg, 0.0, 1.0)));

    const double sc = sinc(theta);
    const double achieved = corr_coeff_from(a, kappa, alpha, sc * sc, p.tau);
    if (!(std::abs(achieved - p.rho) <= design_rho_tolerance))
        throw std::logic_error("Designed theta misses the target correlation.");
    return theta;
}

riscoh::FeasibilityReport riscoh::feasible_n(const ProjectRequirement &p, double theta, double kappa, double eta, double alpha)
{
    p.validate();
    check_env(kappa, eta, alpha);
    const double s2 = sinc2_checked(theta);
    if (theta == pi || s2 == 0.0)
        throw DegenerateDesign("With theta = pi the correlation does not depend on N.");
    if (kappa * eta == 0.0)
        throw DegenerateDesign("With kappa * eta = 0 the correlation does not depend on N.");

    // Smallest reachable correlation is the single-element one
    const double rho_min = rho_for_n(1.0, kappa, eta, alpha, s2, p.tau);
    return {rho_min <= p.rho && p.rho < 1.0, rho_min};
}

std::uint64_t riscoh::design_n(const ProjectRequirement &p, double theta, double kappa, double eta, double alpha)
{
    const auto report = feasible_n(p, theta, kappa, eta, alpha);
    if (!report.feasible)
    {
        std::ostringstream msg;
        msg << "Requirement rho = " << p.rho << " at tau = " << p.tau << " is outside [" << report.bound << ", 1).";
        throw InfeasibleRequirement(msg.str(), report.bound);
    }

    const double s2 = sinc2_checked(theta);
    const double a = lag_power(alpha, p.tau);
    const double num = p.rho * (1.0 - s2) * (kappa + 1.0) + s2 * (p.rho - a);
    const double den = s2 * (1.0 - p.rho) * kappa * eta;
    const double exact = num / den;
    if (!(exact < double(max_design_n)))
        throw std::overflow_error("Required number of RIS elements is too large to represent.");

    auto n = std::max<std::uint64_t>(1, std::uint64_t(std::floor(exact)));

    // Settle rounding at integer crossings so the bracket holds in floating point
    auto rho = [&](std::uint64_t m) { return rho_for_n(double(m), kappa, eta, alpha, s2, p.tau); };
    while (n > 1 && rho(n) > p.rho)
        --n;
    while (rho(n + 1) < p.rho)
        ++n;
    return n;
}
