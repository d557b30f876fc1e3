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
#include "riscoh/cli/figures.hpp"
#include "riscoh/cli/scenario.hpp"
#include "riscoh/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
namespace rc = riscoh::cli;

namespace
{
    constexpr int exit_failure = 1; // computation ran, result negative (infeasible, validation failed)
    constexpr int exit_error = 2;   // bad input or runtime error

    struct Output
    {
        std::string out;      // CSV/JSON destination, stdout when empty
        std::string manifest; // manifest destination; defaults to <out>.manifest.json
    };

    void add_output(CLI::App *cmd, Output &o)
    {
        cmd->add_option("--out,-o", o.out, "Result file (default: stdout)");
        cmd->add_option("--manifest", o.manifest, "Run manifest file (default: <out>.manifest.json when --out is given)");
    }

    void write_file(const std::filesystem::path &path, const std::string &content)
    {
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path());
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        f << content;
        if (!f)
            throw std::runtime_error("failed writing '" + path.string() + "'");
    }

    void emit(const Output &o, const std::string &content, const json &manifest)
    {
        if (o.out.empty())
            std::cout << content << std::flush;
        else
            write_file(o.out, content);

        std::string mpath = o.manifest;
        if (mpath.empty() && !o.out.empty())
            mpath = o.out + ".manifest.json";
        if (!mpath.empty())
            write_file(mpath, manifest.dump(2) + "\n");
    }

    struct SimFlags
    {
        std::string lags;
        std::optional<std::size_t> samples;
        std::optional<std::size_t> trials;
        std::optional<std::uint64_t> seed;
        unsigned threads = 0;
    };

    void add_sim_flags(CLI::App *cmd, SimFlags &f, bool with_budget)
    {
        cmd->add_option("--lags", f.lags, "Lags in samples: 'a:b', 'a:b:step' or 'a,b,c'");
        if (!with_budget)
            return;
        cmd->add_option("--samples", f.samples, "Samples per trial")->check(CLI::PositiveNumber);
        cmd->add_option("--trials", f.trials, "Independent trials")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", f.seed, "Base seed (default: scenario, then $RISCOH_SEED, then 1)");
        cmd->add_option("--threads", f.threads, "Worker threads, 0 = hardware concurrency");
    }

    rc::Scenario load_with(const std::string &path, const SimFlags &f)
    {
        auto sc = rc::load_scenario(path);
        if (!f.lags.empty())
            sc.simulation.lags = rc::parse_lags(f.lags);
        if (f.samples)
            sc.simulation.num_samples = *f.samples;
        if (f.trials)
            sc.simulation.num_trials = *f.trials;
        if (f.seed)
            sc.simulation.seed = *f.seed;
        sc.simulation.threads = f.threads;
        sc.simulation.validate();
        return sc;
    }

    riscoh::Position3D to_position(const std::vector<double> &v)
    {
        return {v.at(0), v.at(1), v.at(2)};
    }

    json position_json(const riscoh::Position3D &p)
    {
        return {p.x, p.y, p.z};
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Temporal coherence control for RIS-aided channels"};
    app.set_version_flag("--version", std::string(riscoh::version_string));
    app.require_subcommand(1);

    // acf ---------------------------------------------------------------
    std::string scenario_path;
    SimFlags sim;
    Output out;
    auto *acf = app.add_subcommand("acf", "Closed-form ACF and correlation coefficient (tau, acf, rho)");
    acf->add_option("--scenario,-s", scenario_path, "Scenario file (JSON)")->required()->check(CLI::ExistingFile);
    add_sim_flags(acf, sim, false);
    add_output(acf, out);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo correlation coefficient (tau, rho_emp, se, rho_analytic)");
    simulate->add_option("--scenario,-s", scenario_path, "Scenario file (JSON)")->required()->check(CLI::ExistingFile);
    add_sim_flags(simulate, sim, true);
    add_output(simulate, out);

    double band = 3.0;
    auto *validate = app.add_subcommand("validate", "Monte Carlo ACF against the closed form, per lag at a standard-error band");
    validate->add_option("--scenario,-s", scenario_path, "Scenario file (JSON)")->required()->check(CLI::ExistingFile);
    validate->add_option("--band", band, "Acceptance band in standard errors")->check(CLI::PositiveNumber);
    add_sim_flags(validate, sim, true);
    add_output(validate, out);

    // design ------------------------------------------------------------
    rc::DesignInputs din;
    auto design_flags = [&](CLI::App *cmd)
    {
        cmd->add_option("--rho", din.rho, "Target correlation coefficient in [0, 1)")->required();
        cmd->add_option("--tau", din.tau, "Target lag in samples (>= 1)")->required();
        cmd->add_option("--kappa-db", din.kappa_db, "Rice factor of the RIS-RX link, dB")->required();
        cmd->add_option("--eta", din.eta, "LOS alignment factor in [0, 1]")->required();
        cmd->add_option("--alpha", din.alpha, "AR(1) coefficient in [0, 1)")->required();
    };
    auto *dtheta = app.add_subcommand("design-theta", "Hopping half-width theta (rad) meeting rho at tau, JSON");
    design_flags(dtheta);
    dtheta->add_option("--N", din.num_elements, "Number of RIS elements")->required()->check(CLI::PositiveNumber);
    add_output(dtheta, out);

    auto *dn = app.add_subcommand("design-n", "Number of RIS elements meeting rho at tau for a given theta, JSON");
    design_flags(dn);
    dn->add_option("--theta", din.theta, "Hopping half-width, rad, in [0, pi]")->required();
    add_output(dn, out);

    // eta ---------------------------------------------------------------
    riscoh::GeometryConfig geo;
    std::vector<double> tx{geo.tx.x, geo.tx.y, geo.tx.z}, rx{geo.rx.x, geo.rx.y, geo.rx.z},
        center{geo.ris_center.x, geo.ris_center.y, geo.ris_center.z};
    std::vector<std::size_t> n_list;
    auto *eta = app.add_subcommand("eta", "LOS alignment factor versus N for a geometry (N, eta)");
    eta->add_option("--tx", tx, "TX position x y z, m")->expected(3);
    eta->add_option("--rx", rx, "RX position x y z, m")->expected(3);
    eta->add_option("--center", center, "RIS center x y z, m")->expected(3);
    eta->add_option("--wavelength", geo.wavelength, "Carrier wavelength, m")->check(CLI::PositiveNumber);
    eta->add_option("--spacing", geo.element_spacing, "Element spacing, m (default: half a wavelength)");
    eta->add_option("--n-list", n_list, "Element counts, ascending (default: 1..256)")->delimiter(',');
    add_output(eta, out);

    // blocks ------------------------------------------------------------
    std::optional<std::uint64_t> block_lag;
    std::size_t num_blocks = 100;
    std::string dist = "exponential";
    double gain_param = 1.0;
    std::string design_var = "theta";
    std::optional<std::uint64_t> block_seed;
    auto *blocks = app.add_subcommand("blocks", "Block-fading power-gain trace (k, gain, block_index)");
    auto *lag_opt = blocks->add_option("--lag", block_lag, "Samples per block")->check(CLI::PositiveNumber);
    blocks->add_option("--scenario,-s", scenario_path, "Scenario file; sets the block length from its coherence lag")
        ->check(CLI::ExistingFile)
        ->excludes(lag_opt);
    blocks->add_option("--design", design_var, "Variable designed for the scenario requirement")->check(CLI::IsMember({"theta", "n"}));
    blocks->add_option("--blocks", num_blocks, "Number of blocks")->check(CLI::PositiveNumber);
    blocks->add_option("--dist", dist, "Per-block gain distribution")->check(CLI::IsMember({"exponential", "constant"}));
    blocks->add_option("--mean,--value", gain_param, "Mean (exponential) or value (constant) of the gain");
    blocks->add_option("--seed", block_seed, "Seed (default: scenario, then $RISCOH_SEED, then 1)");
    add_output(blocks, out);

    // figures -----------------------------------------------------------
    std::string which;
    std::string outdir = "figures";
    rc::FigureOptions fopt;
    auto *figures = app.add_subcommand("figures", "Data behind the reference figures, one CSV bundle per figure");
    figures->add_option("which", which, "fig2, fig3a, fig3b, fig4a, fig4b or all")->required();
    figures->add_option("--outdir", outdir, "Output directory");
    figures->add_option("--wavelength", fopt.wavelength, "Carrier wavelength, m")->check(CLI::PositiveNumber);
    figures->add_option("--eta", fopt.eta, "Scalar eta replacing the geometric one")->check(CLI::Range(0.0, 1.0));
    figures->add_flag("--geometric-eta", fopt.geometric_eta, "fig3b: eta from the geometry at N = 9 instead of 1");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (acf->parsed())
        {
            const auto sc = load_with(scenario_path, sim);
            std::ostringstream os;
            rc::write_acf(sc, sc.simulation.lags, os);
            emit(out, os.str(), rc::run_manifest("acf", {{"scenario", sc.resolved()}, {"lags", sc.simulation.lags}}, std::nullopt));
            return 0;
        }
        if (simulate->parsed())
        {
            const auto sc = load_with(scenario_path, sim);
            std::ostringstream os;
            rc::write_simulation(sc, sc.simulation, os);
            emit(out, os.str(), rc::run_manifest("simulate", {{"scenario", sc.resolved()}}, sc.simulation.seed));
            return 0;
        }
        if (validate->parsed())
        {
            const auto sc = load_with(scenario_path, sim);
            const auto report = rc::validate_scenario(sc, sc.simulation, band);
            std::ostringstream os;
            rc::write_validation(report, os);
            emit(out, os.str(), rc::run_manifest("validate", {{"scenario", sc.resolved()}, {"band", band}, {"pass", report.all_pass()}}, sc.simulation.seed));
            return report.all_pass() ? 0 : exit_failure;
        }
        if (dtheta->parsed() || dn->parsed())
        {
            const bool theta_mode = dtheta->parsed();
            const auto res = theta_mode ? rc::run_design_theta(din) : rc::run_design_n(din);
            json params = {{"rho", din.rho}, {"tau", din.tau}, {"kappa_db", din.kappa_db}, {"eta", din.eta}, {"alpha", din.alpha}};
            if (theta_mode)
                params["N"] = din.num_elements;
            else
                params["theta"] = din.theta;
            emit(out, res.result.dump(2) + "\n", rc::run_manifest(theta_mode ? "design-theta" : "design-n", params, std::nullopt));
            return res.ok ? 0 : exit_failure;
        }
        if (eta->parsed())
        {
            geo.tx = to_position(tx);
            geo.rx = to_position(rx);
            geo.ris_center = to_position(center);
            if (n_list.empty())
                for (std::size_t n = 1; n <= 256; ++n)
                    n_list.push_back(n);
            std::ostringstream os;
            rc::write_eta_sweep(geo, n_list, os);
            json params = {{"tx", position_json(geo.tx)}, {"rx", position_json(geo.rx)}, {"ris_center", position_json(geo.ris_center)},
                           {"wavelength", geo.wavelength}, {"spacing", riscoh::resolved_spacing(geo)}, {"N", n_list}};
            emit(out, os.str(), rc::run_manifest("eta", params, std::nullopt));
            return 0;
        }
        if (blocks->parsed())
        {
            json params = json::object();
            std::uint64_t seed = block_seed ? *block_seed : rc::default_seed();
            riscoh::BlockSpec spec;
            spec.num_blocks = num_blocks;
            if (dist == "exponential")
                spec.gain = riscoh::ExponentialGain{gain_param};
            else
                spec.gain = riscoh::ConstantGain{gain_param};

            if (block_lag)
                spec.coherence_lag = *block_lag;
            else if (!scenario_path.empty())
            {
                const auto sc = rc::load_scenario(scenario_path);
                if (!block_seed)
                    seed = sc.simulation.seed;
                const auto s = sc.simplified();
                riscoh::CoherenceLag lag;
                if (sc.requirement)
                {
                    riscoh::BlockPlanMode mode = riscoh::FixedElements{s.num_elements};
                    if (design_var == "n")
                        mode = riscoh::FixedTheta{sc.policy.is_hopping() ? sc.policy.theta() : 0.0};
                    const auto plan = riscoh::plan_block_length(*sc.requirement, s.kappa, s.eta, s.alpha, mode);
                    lag = plan.coherence;
                    params["plan"] = {{"theta", plan.theta}, {"N", plan.num_elements}, {"rho_at_target", plan.rho_at_target}, {"floor_gap", plan.floor_gap}};
                }
                else
                {
                    const double theta = sc.policy.is_hopping() ? sc.policy.theta() : 0.0;
                    lag = riscoh::coherence_lag(s, theta, sc.threshold.value_or(riscoh::default_coherence_threshold));
                }
                if (lag.unbounded)
                    throw std::runtime_error("coherence lag is unbounded for this scenario; pass --lag");
                spec.coherence_lag = lag.lag;
                params["scenario"] = sc.resolved();
            }
            else
                throw CLI::RequiredError("--lag or --scenario");

            spec.validate();
            const auto trace = riscoh::generate_blocks(spec, seed);
            std::ostringstream os;
            rc::write_blocks(trace, os);
            params["coherence_lag"] = spec.coherence_lag;
            params["blocks"] = spec.num_blocks;
            params["dist"] = dist;
            params[dist == "exponential" ? "mean" : "value"] = gain_param;
            emit(out, os.str(), rc::run_manifest("blocks", params, seed));
            return 0;
        }
        if (figures->parsed())
        {
            std::vector<std::string> names;
            if (which == "all")
                names = rc::figure_names();
            else
                names.push_back(which);
            for (const auto &name : names)
            {
                const auto fig = rc::make_figure(name, fopt);
                for (const auto &[file, content] : fig.files)
                    write_file(std::filesystem::path(outdir) / file, content);
                write_file(std::filesystem::path(outdir) / (name + ".manifest.json"),
                           rc::run_manifest("figures " + name, fig.parameters, std::nullopt).dump(2) + "\n");
                for (const auto &[file, content] : fig.files)
                    std::cout << (std::filesystem::path(outdir) / file).string() << "\n";
            }
            return 0;
        }
    }
    catch (const CLI::Error &e)
    {
        return app.exit(e);
    }
    catch (const rc::ScenarioError &e)
    {
        std::cerr << "riscoh: scenario error: " << e.what() << "\n";
        return exit_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "riscoh: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
