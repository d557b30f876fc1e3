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

#include "riscoh/cli/figures.hpp"
#include "riscoh/acf.hpp"
#include "riscoh/cli/csv.hpp"
#include "riscoh/design.hpp"
#include "riscoh/numeric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

using nlohmann::json;

namespace
{
    using namespace riscoh;
    using riscoh::cli::CsvField;
    using riscoh::cli::CsvWriter;
    using riscoh::cli::FigureOptions;
    using riscoh::cli::FigureOutput;
    using riscoh::cli::format_number;

    // Shared setup: RIS centered at (0, 0, 5), TX at (-10, 0, 0)
    GeometryConfig setup(const FigureOptions &opt, Position3D rx)
    {
        GeometryConfig cfg;
        cfg.rx = rx;
        cfg.wavelength = opt.wavelength;
        return cfg;
    }

    double eta_of(const FigureOptions &opt, const GeometryConfig &cfg, std::size_t n)
    {
        return opt.eta ? *opt.eta : eta_for(cfg, n);
    }

    SimplifiedScenario scenario(std::size_t n, double kappa, double eta, double alpha)
    {
        SimplifiedScenario s;
        s.num_elements = n;
        s.kappa = kappa;
        s.eta = eta;
        s.alpha = alpha;
        return s;
    }

    json geometry_json(const GeometryConfig &cfg)
    {
        return {{"tx", {cfg.tx.x, cfg.tx.y, cfg.tx.z}},
                {"rx", {cfg.rx.x, cfg.rx.y, cfg.rx.z}},
                {"ris_center", {cfg.ris_center.x, cfg.ris_center.y, cfg.ris_center.z}},
                {"wavelength", cfg.wavelength},
                {"spacing", resolved_spacing(cfg)}};
    }

    FigureOutput fig2(const FigureOptions &opt)
    {
        const std::vector<Position3D> receivers{{10, 0, 0}, {15, 0, 0}, {10, 2, 0}, {10, 10, 0}};
        std::vector<std::string> header{"N"};
        for (const auto &rx : receivers)
            header.push_back("eta_rx_" + format_number(rx.x) + "_" + format_number(rx.y) + "_" + format_number(rx.z));

        std::ostringstream os;
        CsvWriter csv(os, header);
        for (std::size_t n = 1; n <= 256; ++n)
        {
            std::vector<CsvField> row{std::uint64_t(n)};
            for (const auto &rx : receivers)
                row.push_back(eta_for(setup(opt, rx), n));
            csv.row(row);
        }

        FigureOutput out{"fig2", {{"fig2.csv", os.str()}}, {}};
        out.parameters = {{"N", {1, 256}}, {"geometry", geometry_json(setup(opt, receivers[0]))}};
        return out;
    }

    FigureOutput fig3a(const FigureOptions &opt)
    {
        const double alpha = 1.0 - 1.12e-4;
        const double kappa = db_to_linear(6.0);
        const std::size_t n = 100;
        const auto cfg = setup(opt, {10, 10, 0});
        const double eta = eta_of(opt, cfg, n);
        const auto s = scenario(n, kappa, eta, alpha);
        const std::vector<std::int64_t> targets{250, 500, 750};

        std::vector<double> thetas{0.0};
        std::ostringstream design;
        CsvWriter dcsv(design, {"tau_target", "rho_target", "theta", "rho_at_target"});
        for (auto t : targets)
        {
            const double theta = design_theta({0.9, t}, n, kappa, eta, alpha);
            thetas.push_back(theta);
            dcsv.row({t, 0.9, theta, corr_coeff(s, theta, t)});
        }

        std::ostringstream curves;
        CsvWriter csv(curves, {"tau", "rho_theta0", "rho_tau250", "rho_tau500", "rho_tau750"});
        for (std::int64_t tau = 0; tau <= 1500; ++tau)
        {
            std::vector<CsvField> row{tau};
            for (double th : thetas)
                row.push_back(corr_coeff(s, th, tau));
            csv.row(row);
        }

        FigureOutput out{"fig3a", {{"fig3a.csv", curves.str()}, {"fig3a_design.csv", design.str()}}, {}};
        out.parameters = {{"alpha", alpha}, {"kappa_db", 6.0}, {"N", n}, {"eta", eta}, {"eta_source", opt.eta ? "override" : "geometry"},
                          {"rho_target", 0.9}, {"tau_targets", targets}, {"thetas", json(std::vector<double>(thetas.begin() + 1, thetas.end()))},
                          {"geometry", geometry_json(cfg)}};
        return out;
    }

    FigureOutput fig3b(const FigureOptions &opt)
    {
        const double alpha = 0.992;
        const double kappa = db_to_linear(-6.0);
        const double theta = 0.0;
        const auto cfg = setup(opt, {15, 0, 0});
        const double eta = opt.eta ? *opt.eta : (opt.geometric_eta ? eta_for(cfg, 9) : 1.0);
        const std::vector<std::int64_t> targets{50, 100, 200, 400};

        std::vector<std::uint64_t> sizes;
        std::ostringstream design;
        CsvWriter dcsv(design, {"tau_target", "rho_target", "N", "rho_at_N", "rho_at_N_plus_1"});
        for (auto t : targets)
        {
            const auto n = design_n({0.9, t}, theta, kappa, eta, alpha);
            sizes.push_back(n);
            dcsv.row({t, 0.9, n, corr_coeff(scenario(n, kappa, eta, alpha), theta, t),
                      corr_coeff(scenario(n + 1, kappa, eta, alpha), theta, t)});
        }

        std::ostringstream curves;
        std::vector<std::string> header{"tau"};
        for (auto t : targets)
            header.push_back("rho_tau" + std::to_string(t));
        CsvWriter csv(curves, header);
        for (std::int64_t tau = 0; tau <= 600; ++tau)
        {
            std::vector<CsvField> row{tau};
            for (auto n : sizes)
                row.push_back(corr_coeff(scenario(n, kappa, eta, alpha), theta, tau));
            csv.row(row);
        }

        FigureOutput out{"fig3b", {{"fig3b.csv", curves.str()}, {"fig3b_design.csv", design.str()}}, {}};
        out.parameters = {{"alpha", alpha}, {"kappa_db", -6.0}, {"theta", theta}, {"eta", eta},
                          {"eta_source", opt.eta ? "override" : (opt.geometric_eta ? "geometry_N9" : "constant")},
                          {"rho_target", 0.9}, {"tau_targets", targets}, {"N", sizes}, {"geometry", geometry_json(cfg)}};
        return out;
    }

    FigureOutput fig4a(const FigureOptions &opt)
    {
        const double kappa = db_to_linear(6.0);
        const std::int64_t tau = 100;
        const auto cfg = setup(opt, {10, 10, 0});
        const std::vector<double> thetas{0.0, 0.5, 1.0};
        const std::vector<std::size_t> sizes{10, 100};

        std::vector<std::string> header{"alpha"};
        json curves_meta = json::array();
        for (auto n : sizes)
            for (double th : thetas)
            {
                header.push_back("rho_theta" + format_number(th) + "_N" + std::to_string(n));
                curves_meta.push_back({{"theta", th}, {"N", n}, {"eta", eta_of(opt, cfg, n)}});
            }

        std::ostringstream os;
        CsvWriter csv(os, header);
        for (int i = 0; i <= 100; ++i)
        {
            const double alpha = 1.0 - std::pow(10.0, -(1.0 + 0.05 * i));
            std::vector<CsvField> row{alpha};
            for (auto n : sizes)
                for (double th : thetas)
                    row.push_back(corr_coeff(scenario(n, kappa, eta_of(opt, cfg, n), alpha), th, tau));
            csv.row(row);
        }

        FigureOutput out{"fig4a", {{"fig4a.csv", os.str()}}, {}};
        out.parameters = {{"kappa_db", 6.0}, {"tau", tau}, {"curves", curves_meta}, {"alpha_grid", "1 - 10^-u, u = 1..6 step 0.05"},
                          {"geometry", geometry_json(cfg)}};
        return out;
    }

    FigureOutput fig4b(const FigureOptions &opt)
    {
        const std::size_t n = 100;
        const double theta = 0.0;
        const std::int64_t tau = 100;
        const auto cfg = setup(opt, {10, 2, 0});
        const double eta = eta_of(opt, cfg, n);
        const std::vector<double> alphas{0.992, 0.999, 1.0 - 1.12e-4};

        std::vector<std::string> header{"kappa_db"};
        for (double a : alphas)
            header.push_back("rho_alpha" + format_number(a));

        std::ostringstream os;
        CsvWriter csv(os, header);
        for (int i = 0; i <= 180; ++i)
        {
            const double kappa_db = -60.0 + 0.5 * i;
            std::vector<CsvField> row{kappa_db};
            for (double a : alphas)
                row.push_back(corr_coeff(scenario(n, db_to_linear(kappa_db), eta, a), theta, tau));
            csv.row(row);
        }

        FigureOutput out{"fig4b", {{"fig4b.csv", os.str()}}, {}};
        out.parameters = {{"N", n}, {"theta", theta}, {"tau", tau}, {"eta", eta}, {"eta_source", opt.eta ? "override" : "geometry"},
                          {"alphas", alphas}, {"kappa_db_grid", {-60.0, 30.0, 0.5}}, {"geometry", geometry_json(cfg)}};
        return out;
    }
}

const std::vector<std::string> &riscoh::cli::figure_names()
{
    static const std::vector<std::string> names{"fig2", "fig3a", "fig3b", "fig4a", "fig4b"};
    return names;
}

riscoh::cli::FigureOutput riscoh::cli::make_figure(const std::string &which, const FigureOptions &opt)
{
    if (!(opt.wavelength > 0.0))
        throw std::invalid_argument("Wavelength must be positive.");
    if (opt.eta && !(*opt.eta >= 0.0 && *opt.eta <= 1.0))
        throw std::invalid_argument("eta must lie in [0, 1].");

    if (which == "fig2")
        return fig2(opt);
    if (which == "fig3a")
        return fig3a(opt);
    if (which == "fig3b")
        return fig3b(opt);
    if (which == "fig4a")
        return fig4a(opt);
    if (which == "fig4b")
        return fig4b(opt);
    throw std::invalid_argument("Unknown figure '" + which + "'.");
}
