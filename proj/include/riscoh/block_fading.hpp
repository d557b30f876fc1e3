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

#ifndef RISCOH_BLOCK_FADING_HPP
#define RISCOH_BLOCK_FADING_HPP

#include "riscoh/acf.hpp"
#include "riscoh/design.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace riscoh
{
    inline constexpr double default_coherence_threshold = 0.9;

    // Number of consecutive samples over which rho stays at or above a threshold
    struct CoherenceLag
    {
        bool unbounded = false; // the tau -> infinity floor already meets the threshold
        std::uint64_t lag = 1;  // valid when !unbounded
    };

    // Largest tau >= 1 with corr_coeff(s, theta, tau) >= threshold (at least 1).
    // Requires threshold in (0, 1).
    CoherenceLag coherence_lag(const SimplifiedScenario &s, double theta, double threshold = default_coherence_threshold);

    // Free design variable for block planning
    struct FixedElements
    {
        std::size_t num_elements = 1; // theta is designed
    };
    struct FixedTheta
    {
        double theta = 0.0; // N is designed
    };
    using BlockPlanMode = std::variant<FixedElements, FixedTheta>;

    struct BlockPlan
    {
        double theta = 0.0;
        std::size_t num_elements = 1;
        double rho_at_target = 0.0; // achieved rho at p.tau
        double floor_gap = 0.0;     // p.rho - rho_at_target, > 0 only for the N design
        CoherenceLag coherence;
    };

    // Designs theta or N for the requirement, then measures the resulting coherence lag
    // at threshold p.rho. The theta design meets p.rho to design_rho_tolerance, which is
    // also granted to the threshold so that the lag reaches p.tau.
    BlockPlan plan_block_length(const ProjectRequirement &p, double kappa, double eta, double alpha, const BlockPlanMode &mode);

    struct ExponentialGain
    {
        double mean = 1.0;
    };
    struct ConstantGain
    {
        double value = 1.0;
    };
    using GainDistribution = std::variant<ExponentialGain, ConstantGain>;

    struct BlockSpec
    {
        std::uint64_t coherence_lag = 1; // samples per block
        GainDistribution gain = ExponentialGain{};
        std::size_t num_blocks = 1;

        void validate() const;
    };

    struct BlockTrace
    {
        std::vector<double> gain;              // length num_blocks * coherence_lag
        std::vector<std::size_t> block_index;  // block of each sample
        std::vector<double> block_gain;        // one draw per block
    };

    // Piecewise-constant power-gain trace, one i.i.d. draw per block
    BlockTrace generate_blocks(const BlockSpec &spec, std::uint64_t seed);
}

#endif
