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

#include "riscoh/cli/commands.hpp"
#include "riscoh/cli/csv.hpp"
#include "riscoh/design.hpp"
#include "riscoh/numeric.hpp"
#include "riscoh/version.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>

using nlohmann::json;

namespace
{
    // Closed-form ACF for every lag in `lags`, plus the lag-0 value
    std::pair<std::vector<double>, double> analytic_acf(const riscoh::cli::Scenario &sc, std::span<const std::int64_t> lags)
    {
        std::vector<double> acf;
        acf.reserve(lags.size());
        if (sc.is_parametric() && sc.policy.is_hopping())
        {
            const auto s = sc.simplified();
            const double theta = sc.policy.theta();
            for (auto tau : lags)
                acf.push_back(riscoh::acf_simplified(s, theta, tau));
            return {acf, riscoh::acf_simplified(s, theta, 0)};
        }
        const auto g = sc.general();
        for (auto tau : lags)
            acf.push_back(riscoh::acf_general(g, tau));
        return {acf, riscoh::acf_general(g, 0)};
    }
}

std::uint64_t riscoh::cli::default_seed()
{
    const char *env = std::getenv(seed_env_var);
    if (!env || !*env)
        return 1;
    char *end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-')
        throw ScenarioError(std::string(seed_env_var) + ": expected a non-negative integer, got '" + env + "'");
    return v;
}

json riscoh::cli::run_manifest(const std::string &command, const json &parameters, std::optional<std::uint64_t> seed)
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);

    json m;
    m["tool"] = "riscoh";
    m["version"] = version_string;
    m["command"] = command;
    m["timestamp"] = stamp;
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["parameters"] = parameters;
    return m;
}

void riscoh::cli::write_acf(const Scenario &sc, std::span<const std::int64_t> lags, std::ostream &out)
{
    const auto [acf, r0] = analytic_acf(sc, lags);
    CsvWriter csv(out, {"tau", "acf", "rho"});
    for (std::size_t i = 0; i < lags.size(); ++i)
        csv.row({lags[i], acf[i], lags[i] == 0 ? 1.0 : acf[i] / r0});
}

void riscoh::cli::write_simulation(const Scenario &sc, const McConfig &cfg, std::ostream &out)
{
    const auto paths = simulate_equivalent(sc.general(), cfg);
    const auto emp = empirical_corr(paths, cfg.lags, cfg.threads);
    const auto [acf, r0] = analytic_acf(sc, cfg.lags);

    CsvWriter csv(out, {"tau", "rho_emp", "se", "rho_analytic"});
    for (std::size_t i = 0; i < cfg.lags.size(); ++i)
        csv.row({emp[i].tau, emp[i].rho, emp[i].se, cfg.lags[i] == 0 ? 1.0 : acf[i] / r0});
}

bool riscoh::cli::ValidationReport::all_pass() const noexcept
{
    for (const auto &r : rows)
        if (!r.pass)
            return false;
    return !rows.empty();
}

riscoh::cli::ValidationReport riscoh::cli::validate_scenario(const Scenario &sc, const McConfig &cfg, double band)
{
    const auto paths = simulate_equivalent(sc.general(), cfg);
    const auto emp = empirical_acf(paths, cfg.lags, cfg.threads);
    const auto [acf, r0] = analytic_acf(sc, cfg.lags);
    (void)r0;

    ValidationReport report;
    report.band = band;
    for (std::size_t i = 0; i < emp.size(); ++i)
    {
        ValidationRow row{emp[i].tau, emp[i].value, emp[i].se, acf[i], 0.0, false};
        const double diff = std::abs(row.acf_emp - row.acf_analytic);
        if (row.se > 0.0)
        {
            row.z = diff / row.se;
            row.pass = row.z <= band;
        }
        else
        {
            // Deterministic channel: only rounding separates the two
            row.pass = diff <= 1e-9 * std::max(1.0, std::abs(row.acf_analytic));
        }
        report.rows.push_back(row);
    }
    return report;
}

void riscoh::cli::write_validation(const ValidationReport &report, std::ostream &out)
{
    CsvWriter csv(out, {"tau", "acf_emp", "se", "acf_analytic", "z", "pass"});
    for (const auto &r : report.rows)
        csv.row({r.tau, r.acf_emp, r.se, r.acf_analytic, r.z, std::string(r.pass ? "true" : "false")});
}

riscoh::cli::DesignOutput riscoh::cli::run_design_theta(const DesignInputs &in)
{
    const ProjectRequirement p{in.rho, in.tau};
    const double kappa = db_to_linear(in.kappa_db);
    const auto report = feasible_theta(p, in.num_elements, kappa, in.eta, in.alpha);

    DesignOutput out;
    out.result = {{"value", nullptr}, {"feasible", report.feasible}, {"bound", report.bound}, {"verified_rho", nullptr}};
    if (!report.feasible)
        return out;

    const double theta = design_theta(p, in.num_elements, kappa, in.eta, in.alpha);
    SimplifiedScenario s;
    s.num_elements = in.num_elements;
    s.kappa = kappa;
    s.eta = in.eta;
    s.alpha = in.alpha;
    out.result["value"] = theta;
    out.result["verified_rho"] = corr_coeff(s, theta, p.tau);
    out.ok = true;
    return out;
}

riscoh::cli::DesignOutput riscoh::cli::run_design_n(const DesignInputs &in)
{
    const ProjectRequirement p{in.rho, in.tau};
    const double kappa = db_to_linear(in.kappa_db);
    const auto report = feasible_n(p, in.theta, kappa, in.eta, in.alpha);

    DesignOutput out;
    out.result = {{"value", nullptr}, {"feasible", report.feasible}, {"bound", report.bound}, {"verified_rho", nullptr}};
    if (!report.feasible)
        return out;

    const auto n = design_n(p, in.theta, kappa, in.eta, in.alpha);
    const double sc = sinc(in.theta);
    out.result["value"] = n;
    out.result["verified_rho"] = corr_coeff_from(double(n) * kappa * in.eta, kappa, in.alpha, sc * sc, p.tau);
    out.result["verified_rho_next"] = corr_coeff_from(double(n + 1) * kappa * in.eta, kappa, in.alpha, sc * sc, p.tau);
    out.ok = true;
    return out;
}

void riscoh::cli::write_eta_sweep(const GeometryConfig &cfg, std::span<const std::size_t> n_list, std::ostream &out)
{
    CsvWriter csv(out, {"N", "eta"});
    for (const auto &pt : eta_sweep(cfg, n_list))
        csv.row({std::uint64_t(pt.n), pt.eta});
}

void riscoh::cli::write_blocks(const BlockTrace &trace, std::ostream &out)
{
    CsvWriter csv(out, {"k", "gain", "block_index"});
    for (std::size_t k = 0; k < trace.gain.size(); ++k)
        csv.row({std::uint64_t(k), trace.gain[k], std::uint64_t(trace.block_index[k])});
}
