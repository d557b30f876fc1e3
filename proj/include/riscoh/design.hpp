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

#ifndef RISCOH_DESIGN_HPP
#define RISCOH_DESIGN_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace riscoh
{
    // Target correlation `rho` at target lag `tau`
    struct ProjectRequirement
    {
        double rho = 0.9;
        std::int64_t tau = 1;

        // Throws std::invalid_argument unless 0 <= rho <= 1 and tau >= 1
        void validate() const;
    };

    // Outcome of a feasibility check. For the theta design `bound` is the
    // largest reachable correlation; for the N design it is the smallest.
    struct FeasibilityReport
    {
        bool feasible = false;
        double bound = 0.0;
    };

    // Requirement outside the feasible set; carries the violated bound
    class InfeasibleRequirement : public std::runtime_error
    {
    public:
        InfeasibleRequirement(const std::string &what, double bound) : std::runtime_error(what), bound_(bound) {}
        double bound() const noexcept { return bound_; }

    private:
        double bound_;
    };

    // Parameter combination for which N has no influence on the correlation
    class DegenerateDesign : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Design round trips are verified to this absolute tolerance on rho
    inline constexpr double design_rho_tolerance = 1e-9;

    // Inverse of sin(x)/x on [0, pi] by bisection. Throws std::domain_error for y outside [0, 1].
    double inv_sinc(double y);

    // Feasibility of choosing theta for a fixed RIS size
    FeasibilityReport feasible_theta(const ProjectRequirement &p, std::size_t num_elements, double kappa, double eta, double alpha);

    // Hopping width theta that yields rho[tau] = p.rho. Throws InfeasibleRequirement
    // when p.rho exceeds the theta = 0 correlation.
    double design_theta(const ProjectRequirement &p, std::size_t num_elements, double kappa, double eta, double alpha);

    // Feasibility of choosing N for a fixed hopping width; eta is assumed independent of N.
    // Throws DegenerateDesign when theta = pi or kappa * eta = 0.
    FeasibilityReport feasible_n(const ProjectRequirement &p, double theta, double kappa, double eta, double alpha);

    // Largest N with rho_N[tau] <= p.rho, so that rho_N[tau] <= p.rho <= rho_{N+1}[tau]
    std::uint64_t design_n(const ProjectRequirement &p, double theta, double kappa, double eta, double alpha);
}

#endif
