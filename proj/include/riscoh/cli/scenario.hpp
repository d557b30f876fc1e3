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

#ifndef RISCOH_CLI_SCENARIO_HPP
#define RISCOH_CLI_SCENARIO_HPP

#include "riscoh/acf.hpp"
#include "riscoh/design.hpp"
#include "riscoh/geometry.hpp"
#include "riscoh/mc_sim.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace riscoh::cli
{
    // Schema violation or malformed document; the message names the field
    // (JSON pointer) or the line/column of a syntax error
    class ScenarioError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Scenario file, JSON (comments allowed). Sections:
    //   geometry    { tx, rx, ris_center: [x,y,z] m, wavelength: m, spacing: m, grid: [rows, cols], eta }
    //   environment { alpha, kappa_db, sigma2 }
    //   ris         { N, policy: "static" | "hopping", phases: [...] | theta }
    //   channels    { direct: {los_mean: [re,im], alpha, sigma2} | null, tx_ris: [...], ris_rx: [...] }
    //   simulation  { samples, trials, seed, lags }
    //   design      { rho, tau, threshold }
    // `channels` (explicit per-element parameters) and `environment` are mutually exclusive.
    struct Scenario
    {
        std::size_t num_elements = 1;
        PhasePolicy policy = PhasePolicy::hopping(0.0);

        // Parametric form
        std::optional<EnvSet> environment;
        double kappa_db = 0.0;
        std::optional<GeometryConfig> geometry;
        std::optional<std::pair<std::size_t, std::size_t>> grid;
        std::optional<double> eta_override;

        // Explicit form
        std::optional<GeneralScenario> channels;

        McConfig simulation;
        std::optional<ProjectRequirement> requirement;
        std::optional<double> threshold;

        bool is_parametric() const noexcept { return environment.has_value(); }

        // eta from the override or from the geometry (parametric form only)
        double eta() const;

        // Requires the parametric form
        SimplifiedScenario simplified() const;

        // Explicit channels, or the parametric form realized with LOS vectors
        // obeying |h_n LOS|^2 = kappa * sigma2 and static TX-RIS channels
        GeneralScenario general() const;

        // Fully resolved parameters, for run manifests
        nlohmann::json resolved() const;
    };

    Scenario parse_scenario(const std::string &text);
    Scenario load_scenario(const std::string &path);

    // Unit-modulus pair (g, h) of length n with compute_eta(g, h) == eta.
    // Used when the scenario fixes eta without geometry. n = 1 requires eta = 1.
    std::pair<LosVector, LosVector> synthetic_los_pair(std::size_t n, double eta);

    // "a:b" (inclusive), "a:b:step" or "a,b,c"
    std::vector<std::int64_t> parse_lags(const std::string &spec);
}

#endif
