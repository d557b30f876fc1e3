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

#ifndef RISCOH_CLI_COMMANDS_HPP
#define RISCOH_CLI_COMMANDS_HPP

#include "riscoh/block_fading.hpp"
#include "riscoh/cli/scenario.hpp"
#include "riscoh/geometry.hpp"
#include "riscoh/mc_sim.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace riscoh::cli
{
    // Environment variable holding the default seed
    inline constexpr const char *seed_env_var = "RISCOH_SEED";

    // Value of RISCOH_SEED, or 1 when unset. Throws ScenarioError on a malformed value.
    std::uint64_t default_seed();

    // Run manifest: resolved parameters, seed, toolkit version and UTC timestamp
    nlohmann::json run_manifest(const std::string &command, const nlohmann::json &parameters, std::optional<std::uint64_t> seed);

    // tau,acf,rho from the closed forms. The parametric form with a hopping
    // policy uses the simplified expression, everything else the general one.
    void write_acf(const Scenario &sc, std::span<const std::int64_t> lags, std::ostream &out);

    // tau,rho_emp,se,rho_analytic
    void write_simulation(const Scenario &sc, const McConfig &cfg, std::ostream &out);

    struct ValidationRow
    {
        std::int64_t tau = 0;
        double acf_emp = 0.0;
        double se = 0.0;
        double acf_analytic = 0.0;
        double z = 0.0; // deviation in standard errors
        bool pass = false;
    };

    struct ValidationReport
    {
        std::vector<ValidationRow> rows;
        double band = 3.0;

        bool all_pass() const noexcept;
    };

    // Monte Carlo estimate against the closed form, lag by lag, at `band` standard errors
    ValidationReport validate_scenario(const Scenario &sc, const McConfig &cfg, double band = 3.0);
    void write_validation(const ValidationReport &report, std::ostream &out);

    struct DesignInputs
    {
        double rho = 0.9;
        std::int64_t tau = 1;
        double kappa_db = 0.0;
        double eta = 1.0;
        double alpha = 0.0;
        std::size_t num_elements = 1; // theta design
        double theta = 0.0;           // N design
    };

    struct DesignOutput
    {
        nlohmann::json result; // {value, feasible, bound, verified_rho}
        bool ok = false;
    };

    DesignOutput run_design_theta(const DesignInputs &in);
    DesignOutput run_design_n(const DesignInputs &in);

    // N,eta
    void write_eta_sweep(const GeometryConfig &cfg, std::span<const std::size_t> n_list, std::ostream &out);

    // k,gain,block_index
    void write_blocks(const BlockTrace &trace, std::ostream &out);
}

#endif
