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

#include "riscoh/ris_policy.hpp"
#include "riscoh/numeric.hpp"
#include "riscoh/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

riscoh::PhasePolicy riscoh::PhasePolicy::static_phases(std::vector<double> phases)
{
    if (phases.empty())
        throw std::invalid_argument("Static policy needs at least one phase.");
    for (double p : phases)
        if (!(p >= 0.0 && p < 2.0 * pi))
            throw std::invalid_argument("Static phases must lie in [0, 2pi), got " + std::to_string(p) + ".");
    return PhasePolicy(StaticPhases{std::move(phases)});
}

riscoh::PhasePolicy riscoh::PhasePolicy::hopping(double theta)
{
    if (!(theta >= 0.0 && theta <= pi))
        throw std::invalid_argument("Hopping width theta must lie in [0, pi].");
    return PhasePolicy(UniformHopping{theta});
}

double riscoh::PhasePolicy::theta() const
{
    if (const auto *h = std::get_if<UniformHopping>(&rule_))
        return h->theta;
    throw std::logic_error("Static policy has no hopping width.");
}

std::size_t riscoh::PhasePolicy::fixed_size() const noexcept
{
    if (const auto *s = std::get_if<StaticPhases>(&rule_))
        return s->phases.size();
    return 0;
}

std::vector<double> riscoh::sample_phases(const PhasePolicy &policy, std::size_t num_elements, std::uint64_t k, std::uint64_t seed)
{
    if (num_elements == 0)
        throw std::invalid_argument("Number of RIS elements must be at least 1.");

    if (const auto *s = std::get_if<StaticPhases>(&policy.rule()))
    {
        if (s->phases.size() != num_elements)
            throw std::invalid_argument("Static policy has " + std::to_string(s->phases.size()) +
                                        " phases, expected " + std::to_string(num_elements) + ".");
        return s->phases;
    }

    const double theta = policy.theta();
    std::vector<double> out(num_elements);
    for (std::size_t n = 0; n < num_elements; ++n)
        out[n] = (pi - theta) + 2.0 * theta * counter_uniform(seed, k, n);
    return out;
}

riscoh::ReflectionConfig riscoh::reflection_coefficients(std::span<const double> phases)
{
    ReflectionConfig out;
    out.reserve(phases.size());
    for (double p : phases)
    {
        if (!std::isfinite(p))
            throw std::invalid_argument("Phases must be finite.");
        out.emplace_back(std::cos(p), -std::sin(p));
    }
    return out;
}

std::complex<double> riscoh::mean_reflection(const PhasePolicy &policy, std::size_t n)
{
    if (const auto *s = std::get_if<StaticPhases>(&policy.rule()))
    {
        if (n >= s->phases.size())
            throw std::out_of_range("Element index outside the static configuration.");
        return {std::cos(s->phases[n]), -std::sin(s->phases[n])};
    }
    return {-sinc(policy.theta()), 0.0};
}

std::complex<double> riscoh::ccf_reflection(const PhasePolicy &policy, std::size_t n, std::size_t m, std::int64_t tau)
{
    if (const auto *s = std::get_if<StaticPhases>(&policy.rule()))
    {
        if (n >= s->phases.size() || m >= s->phases.size())
            throw std::out_of_range("Element index outside the static configuration.");
        if (n == m)
            return 1.0;
        return std::polar(1.0, -(s->phases[n] - s->phases[m]));
    }

    if (n == m && tau == 0)
        return 1.0;
    const double sc = sinc(policy.theta());
    return sc * sc;
}
