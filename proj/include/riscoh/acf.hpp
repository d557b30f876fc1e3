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

#ifndef RISCOH_ACF_HPP
#define RISCOH_ACF_HPP

#include "riscoh/channel.hpp"
#include "riscoh/ris_policy.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace riscoh
{
    // Equivalent channel h_eq[k] = h_D[k] + sum_n g_n[k] h_n[k] psi_n[k].
    // An empty `direct` means the direct path is blocked (h_D = 0).
    struct GeneralScenario
    {
        std::optional<RicianParams> direct;
        std::vector<RicianParams> tx_ris; // g_n
        std::vector<RicianParams> ris_rx; // h_n
        PhasePolicy policy = PhasePolicy::hopping(0.0);

        std::size_t element_count() const noexcept { return tx_ris.size(); }

        // Throws std::invalid_argument on length mismatch or invalid parameters
        void validate() const;
    };

    // Parametric scenario with no direct path, static TX-RIS channels, RIS-RX
    // channels sharing one environment and |h_n LOS|^2 = kappa * sigma2 for all n.
    struct SimplifiedScenario
    {
        std::size_t num_elements = 1;
        double kappa = 1.0; // linear
        double eta = 1.0;
        double alpha = 0.0;
        double sigma2 = 1.0;
        double g_norm2 = 1.0; // |g LOS|^2, scale only

        void validate() const;

        // N * kappa * eta
        double los_product() const noexcept { return double(num_elements) * kappa * eta; }
    };

    // Decomposition of the ACF into the direct-path term, the cascaded term
    // and the direct/cascaded cross term
    struct AcfTerms
    {
        double direct = 0.0;  // S1
        double cascade = 0.0; // S2
        double cross = 0.0;   // S3

        double total() const noexcept { return direct + cascade + cross; }
    };

    // Per-term closed forms; throws std::logic_error when a provably real
    // term carries an imaginary residue above 1e-10 (relative)
    AcfTerms acf_terms(const GeneralScenario &scenario, std::int64_t tau);

    // R[tau] = E{h_eq[k] h_eq^*[k - tau]} = S1 + S2 + S3
    double acf_general(const GeneralScenario &scenario, std::int64_t tau);

    // Closed-form ACF under uniform phase hopping of width theta
    double acf_simplified(const SimplifiedScenario &s, double theta, std::int64_t tau);

    // rho[tau] = R[tau] / R[0]
    double corr_coeff(const SimplifiedScenario &s, double theta, std::int64_t tau);

    // (rho at theta = pi, rho at theta = 0)
    std::pair<double, double> corr_limits(const SimplifiedScenario &s, std::int64_t tau);

    // rho[tau] from the pair (N kappa eta, sinc^2 theta); shared by the design solvers
    double corr_coeff_from(double los_product, double kappa, double alpha, double sinc2, std::int64_t tau) noexcept;
}

#endif
