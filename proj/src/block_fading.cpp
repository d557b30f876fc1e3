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

#include "riscoh/block_fading.hpp"
#include "riscoh/numeric.hpp"
#include "riscoh/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace
{
    constexpr std::uint64_t max_search_lag = std::uint64_t(1) << 62;
}

riscoh::CoherenceLag riscoh::coherence_lag(const SimplifiedScenario &s, double theta, double threshold)
{
    s.validate();
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("Coherence threshold must lie in (0, 1).");
    if (!(theta >= 0.0 && theta <= pi))
        throw std::invalid_argument("Hopping width theta must lie in [0, pi].");

    const double sc = sinc(theta);
    const double s2 = sc * sc;
    auto rho = [&](std::uint64_t tau) { return corr_coeff_from(s.los_product(), s.kappa, s.alpha, s2, std::int64_t(tau)); };

    // rho decreases in tau towards this floor
    const double a = s.los_product();
    const double floor = s2 * a / ((1.0 - s2) * (s.kappa + 1.0) + s2 * (a + 1.0));
    if (floor >= threshold)
        return {true, 0};
    if (theta == pi || rho(1) < threshold)
        return {false, 1};

    std::uint64_t lo = 1, hi = 2;
    while (rho(hi) >= threshold)
    {
        lo = hi;
        if (hi >= max_search_lag)
            return {true, 0};
        hi *= 2;
    }
    while (hi - lo > 1)
    {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (rho(mid) >= threshold)
            lo = mid;
        else
            hi = mid;
    }
    return {false, lo};
}

riscoh::BlockPlan riscoh::plan_block_length(const ProjectRequirement &p, double kappa, double eta, double alpha, const BlockPlanMode &mode)
{
    p.validate();

    BlockPlan plan;
    if (const auto *fe = std::get_if<FixedElements>(&mode))
    {
        plan.num_elements = fe->num_elements;
        plan.theta = design_theta(p, fe->num_elements, kappa, eta, alpha);
    }
    else
    {
        plan.theta = std::get<FixedTheta>(mode).theta;
        const auto n = design_n(p, plan.theta, kappa, eta, alpha);
        if (n > std::uint64_t(std::numeric_limits<std::size_t>::max()))
            throw std::overflow_error("Designed RIS size does not fit the platform size type.");
        plan.num_elements = std::size_t(n);
    }

    SimplifiedScenario s;
    s.num_elements = plan.num_elements;
    s.kappa = kappa;
    s.eta = eta;
    s.alpha = alpha;
    plan.rho_at_target = corr_coeff(s, plan.theta, p.tau);
    plan.floor_gap = std::max(0.0, p.rho - plan.rho_at_target);

    const double threshold = p.rho - design_rho_tolerance;
    if (threshold <= 0.0)
        plan.coherence = {false, 1};
    else
        plan.coherence = coherence_lag(s, plan.theta, threshold);
    return plan;
}

void riscoh::BlockSpec::validate() const
{
    if (coherence_lag == 0)
        throw std::invalid_argument("Coherence lag must be at least one sample.");
    if (num_blocks == 0)
        throw std::invalid_argument("Number of blocks must be at least 1.");
    const double param = std::visit([](const auto &d)
    {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, ExponentialGain>)
            return d.mean;
        else
            return d.value;
    }, gain);
    if (!(param > 0.0) || !std::isfinite(param))
        throw std::invalid_argument("Gain distribution parameter must be positive.");
}

riscoh::BlockTrace riscoh::generate_blocks(const BlockSpec &spec, std::uint64_t seed)
{
    spec.validate();
    const std::size_t lag = std::size_t(spec.coherence_lag);

    BlockTrace trace;
    trace.block_gain.resize(spec.num_blocks);
    Stream rng(derive_seed(seed, {stream_tag::blocks}));
    for (auto &z : trace.block_gain)
    {
        if (const auto *e = std::get_if<ExponentialGain>(&spec.gain))
            z = -e->mean * std::log1p(-rng.uniform());
        else
            z = std::get<ConstantGain>(spec.gain).value;
    }

    trace.gain.reserve(spec.num_blocks * lag);
    trace.block_index.reserve(spec.num_blocks * lag);
    for (std::size_t b = 0; b < spec.num_blocks; ++b)
        for (std::size_t i = 0; i < lag; ++i)
        {
            trace.gain.push_back(trace.block_gain[b]);
            trace.block_index.push_back(b);
        }
    return trace;
}
