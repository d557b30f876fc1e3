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

#ifndef RISCOH_RIS_POLICY_HPP
#define RISCOH_RIS_POLICY_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace riscoh
{
    // Fixed configuration, phases in [0, 2pi)
    struct StaticPhases
    {
        std::vector<double> phases;
    };

    // Phases drawn i.i.d. from U(pi - theta, pi + theta), independently for
    // every element n and every time index k
    struct UniformHopping
    {
        double theta = 0.0;
    };

    // Phase-shift generation rule of the RIS. Both alternatives produce
    // wide-sense stationary reflection processes.
    class PhasePolicy
    {
    public:
        using Variant = std::variant<StaticPhases, UniformHopping>;

        static PhasePolicy static_phases(std::vector<double> phases);
        static PhasePolicy hopping(double theta);

        const Variant &rule() const noexcept { return rule_; }
        bool is_hopping() const noexcept { return std::holds_alternative<UniformHopping>(rule_); }

        // Throws std::logic_error for static policies
        double theta() const;

        // Number of phases for static policies, 0 (any N) for hopping
        std::size_t fixed_size() const noexcept;

    private:
        explicit PhasePolicy(Variant v) : rule_(std::move(v)) {}
        Variant rule_;
    };

    // N phases for time index k. Hopping draws are addressed by (seed, k, n).
    std::vector<double> sample_phases(const PhasePolicy &policy, std::size_t num_elements, std::uint64_t k, std::uint64_t seed);

    // psi_n = exp(-j phi_n), unit modulus
    using ReflectionConfig = std::vector<std::complex<double>>;
    ReflectionConfig reflection_coefficients(std::span<const double> phases);

    // E{psi_n[k]}; -sinc(theta) for hopping
    std::complex<double> mean_reflection(const PhasePolicy &policy, std::size_t n);

    // E{psi_n[k] psi_m^*[k - tau]}.
    // Static: psi_n psi_m^* for every tau (complex in general).
    // Hopping: 1 for (n == m, tau == 0), sinc^2(theta) otherwise.
    std::complex<double> ccf_reflection(const PhasePolicy &policy, std::size_t n, std::size_t m, std::int64_t tau);
}

#endif
