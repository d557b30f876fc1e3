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

#include "riscoh/cli/scenario.hpp"
#include "riscoh/cli/commands.hpp"
#include "riscoh/numeric.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace
{
    using riscoh::cli::ScenarioError;

    [[noreturn]] void fail(const std::string &ptr, const std::string &msg)
    {
        throw ScenarioError(ptr + ": " + msg);
    }

    void check_object(const json &j, const std::string &ptr, const std::set<std::string> &allowed)
    {
        if (!j.is_object())
            fail(ptr, "expected an object");
        for (const auto &[key, value] : j.items())
            if (!allowed.count(key))
                fail(ptr, "unknown key '" + key + "'");
    }

    double number(const json &obj, const std::string &key, const std::string &ptr)
    {
        const auto &v = obj.at(key);
        if (!v.is_number())
            fail(ptr + "/" + key, "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            fail(ptr + "/" + key, "must be finite");
        return d;
    }

    std::optional<double> opt_number(const json &obj, const std::string &key, const std::string &ptr)
    {
        if (!obj.contains(key))
            return std::nullopt;
        return number(obj, key, ptr);
    }

    std::uint64_t count(const json &obj, const std::string &key, const std::string &ptr, std::uint64_t min_value)
    {
        const auto &v = obj.at(key);
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            fail(ptr + "/" + key, "expected a non-negative integer");
        const auto u = v.get<std::uint64_t>();
        if (u < min_value)
            fail(ptr + "/" + key, "must be at least " + std::to_string(min_value));
        return u;
    }

    riscoh::Position3D position(const json &obj, const std::string &key, const std::string &ptr)
    {
        const auto &v = obj.at(key);
        if (!v.is_array() || v.size() != 3)
            fail(ptr + "/" + key, "expected a position [x, y, z] in meters");
        riscoh::Position3D p;
        double *dst[3] = {&p.x, &p.y, &p.z};
        for (std::size_t i = 0; i < 3; ++i)
        {
            if (!v[i].is_number() || !std::isfinite(v[i].get<double>()))
                fail(ptr + "/" + key + "/" + std::to_string(i), "expected a finite number");
            *dst[i] = v[i].get<double>();
        }
        return p;
    }

    riscoh::RicianParams rician(const json &j, const std::string &ptr)
    {
        check_object(j, ptr, {"los_mean", "alpha", "sigma2"});
        for (const char *k : {"los_mean", "alpha", "sigma2"})
            if (!j.contains(k))
                fail(ptr, std::string("missing key '") + k + "'");

        const auto &lm = j.at("los_mean");
        if (!lm.is_array() || lm.size() != 2 || !lm[0].is_number() || !lm[1].is_number())
            fail(ptr + "/los_mean", "expected [re, im]");

        riscoh::RicianParams p{{lm[0].get<double>(), lm[1].get<double>()}, number(j, "alpha", ptr), number(j, "sigma2", ptr)};
        if (!(p.alpha >= 0.0 && p.alpha < 1.0))
            fail(ptr + "/alpha", "must lie in [0, 1)");
        if (!(p.sigma2 >= 0.0))
            fail(ptr + "/sigma2", "must be non-negative");
        return p;
    }

    std::vector<riscoh::RicianParams> rician_list(const json &j, const std::string &key, const std::string &ptr, std::size_t expected)
    {
        if (!j.contains(key))
            fail(ptr, "missing key '" + key + "'");
        const auto &arr = j.at(key);
        if (!arr.is_array())
            fail(ptr + "/" + key, "expected an array");
        if (arr.size() != expected)
            fail(ptr + "/" + key, "expected " + std::to_string(expected) + " entries (ris/N), got " + std::to_string(arr.size()));
        std::vector<riscoh::RicianParams> out;
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.push_back(rician(arr[i], ptr + "/" + key + "/" + std::to_string(i)));
        return out;
    }

    json rician_json(const riscoh::RicianParams &p)
    {
        return {{"los_mean", {p.los_mean.real(), p.los_mean.imag()}}, {"alpha", p.alpha}, {"sigma2", p.sigma2}};
    }

    json position_json(const riscoh::Position3D &p)
    {
        return json::array({p.x, p.y, p.z});
    }
}

std::pair<riscoh::LosVector, riscoh::LosVector> riscoh::cli::synthetic_los_pair(std::size_t n, double eta)
{
    if (n == 0)
        throw std::invalid_argument("Number of RIS elements must be at least 1.");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("Orthogonality measure eta must lie in [0, 1].");
    LosVector g(n, Complex(1.0, 0.0));
    if (n == 1)
    {
        if (eta != 1.0)
            throw std::invalid_argument("A single-element RIS always has eta = 1.");
        return {g, g};
    }

    // Split the elements into two groups with opposite phase offsets +-beta
    // (and one zero-phase element when n is odd) so that |sum h_n| = n sqrt(eta)
    const double nn = double(n);
    const double target = nn * std::sqrt(eta);
    const std::size_t pairs = n / 2;
    const double fixed = (n % 2 == 1) ? 1.0 : 0.0;
    const double beta = std::acos(std::clamp((target - fixed) / (2.0 * double(pairs)), -1.0, 1.0));

    LosVector h;
    h.reserve(n);
    for (std::size_t i = 0; i < pairs; ++i)
    {
        h.push_back(std::polar(1.0, beta));
        h.push_back(std::polar(1.0, -beta));
    }
    if (n % 2 == 1)
        h.emplace_back(1.0, 0.0);
    return {g, h};
}

std::vector<std::int64_t> riscoh::cli::parse_lags(const std::string &spec)
{
    auto to_int = [&](const std::string &s) -> std::int64_t
    {
        std::size_t used = 0;
        long long v = 0;
        try
        {
            v = std::stoll(s, &used);
        }
        catch (const std::exception &)
        {
            throw std::invalid_argument("Invalid lag '" + s + "' in '" + spec + "'.");
        }
        if (used != s.size() || v < 0)
            throw std::invalid_argument("Invalid lag '" + s + "' in '" + spec + "'.");
        return v;
    };

    std::vector<std::int64_t> out;
    if (spec.find(':') != std::string::npos)
    {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        for (std::string part; std::getline(ss, part, ':');)
            parts.push_back(part);
        if (parts.size() < 2 || parts.size() > 3)
            throw std::invalid_argument("Lag range must be 'first:last' or 'first:last:step'.");
        const auto first = to_int(parts[0]), last = to_int(parts[1]);
        const auto step = parts.size() == 3 ? to_int(parts[2]) : 1;
        if (step < 1 || last < first)
            throw std::invalid_argument("Lag range '" + spec + "' is empty.");
        for (auto t = first; t <= last; t += step)
            out.push_back(t);
        return out;
    }

    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ',');)
        out.push_back(to_int(part));
    if (out.empty())
        throw std::invalid_argument("Empty lag list.");
    return out;
}

double riscoh::cli::Scenario::eta() const
{
    if (eta_override)
        return *eta_override;
    if (!geometry)
        throw ScenarioError("/geometry: eta or positions are required");
    const double spacing = resolved_spacing(*geometry);
    const RisLayout layout = grid ? RisLayout(geometry->ris_center, grid->first, grid->second, spacing)
                                  : RisLayout(geometry->ris_center, num_elements, spacing);
    return compute_eta(los_vector(geometry->tx, layout, geometry->wavelength), los_vector(geometry->rx, layout, geometry->wavelength));
}

riscoh::SimplifiedScenario riscoh::cli::Scenario::simplified() const
{
    if (!environment)
        throw ScenarioError("/environment: required for the parametric scenario form");
    SimplifiedScenario s;
    s.num_elements = num_elements;
    s.kappa = environment->kappa;
    s.eta = eta();
    s.alpha = environment->alpha;
    s.sigma2 = environment->sigma2;
    s.g_norm2 = double(num_elements);
    return s;
}

riscoh::GeneralScenario riscoh::cli::Scenario::general() const
{
    if (channels)
        return *channels;
    if (!environment)
        throw ScenarioError("/environment: required for the parametric scenario form");

    LosVector g, h;
    if (geometry && !eta_override)
    {
        const double spacing = resolved_spacing(*geometry);
        const RisLayout layout = grid ? RisLayout(geometry->ris_center, grid->first, grid->second, spacing)
                                      : RisLayout(geometry->ris_center, num_elements, spacing);
        g = los_vector(geometry->tx, layout, geometry->wavelength);
        h = los_vector(geometry->rx, layout, geometry->wavelength);
    }
    else
        std::tie(g, h) = synthetic_los_pair(num_elements, eta());

    const double los_amp = std::sqrt(environment->kappa * environment->sigma2);
    GeneralScenario out;
    out.policy = policy;
    for (std::size_t n = 0; n < num_elements; ++n)
    {
        out.tx_ris.push_back({g[n], 0.0, 0.0});
        out.ris_rx.push_back({los_amp * h[n], environment->alpha, environment->sigma2});
    }
    return out;
}

json riscoh::cli::Scenario::resolved() const
{
    json j;
    json ris = {{"N", num_elements}};
    if (policy.is_hopping())
    {
        ris["policy"] = "hopping";
        ris["theta"] = policy.theta();
    }
    else
    {
        ris["policy"] = "static";
        ris["phases"] = std::get<StaticPhases>(policy.rule()).phases;
    }
    j["ris"] = ris;

    if (environment)
    {
        j["environment"] = {{"alpha", environment->alpha}, {"kappa_db", kappa_db}, {"kappa", environment->kappa}, {"sigma2", environment->sigma2}};
        json geo = json::object();
        if (geometry)
        {
            geo["tx"] = position_json(geometry->tx);
            geo["rx"] = position_json(geometry->rx);
            geo["ris_center"] = position_json(geometry->ris_center);
            geo["wavelength"] = geometry->wavelength;
            geo["spacing"] = resolved_spacing(*geometry);
            if (grid)
                geo["grid"] = {grid->first, grid->second};
        }
        if (eta_override)
            geo["eta"] = *eta_override;
        geo["eta_resolved"] = eta();
        j["geometry"] = geo;
    }
    if (channels)
    {
        json ch;
        ch["direct"] = channels->direct ? rician_json(*channels->direct) : json(nullptr);
        ch["tx_ris"] = json::array();
        ch["ris_rx"] = json::array();
        for (const auto &p : channels->tx_ris)
            ch["tx_ris"].push_back(rician_json(p));
        for (const auto &p : channels->ris_rx)
            ch["ris_rx"].push_back(rician_json(p));
        j["channels"] = ch;
    }
    j["simulation"] = {{"samples", simulation.num_samples}, {"trials", simulation.num_trials}, {"seed", simulation.seed}, {"lags", simulation.lags}};
    if (requirement)
        j["design"] = {{"rho", requirement->rho}, {"tau", requirement->tau}, {"threshold", threshold.value_or(requirement->rho)}};
    return j;
}

riscoh::cli::Scenario riscoh::cli::parse_scenario(const std::string &text)
{
    json doc;
    try
    {
        doc = json::parse(text, nullptr, true, true);
    }
    catch (const json::parse_error &e)
    {
        throw ScenarioError(std::string("syntax error: ") + e.what());
    }

    check_object(doc, "", {"geometry", "environment", "ris", "channels", "simulation", "design"});
    Scenario sc;
    sc.simulation.seed = default_seed();
    sc.simulation.lags.clear();
    for (std::int64_t t = 0; t <= 10; ++t)
        sc.simulation.lags.push_back(t);

    // ris
    if (!doc.contains("ris"))
        fail("", "missing section 'ris'");
    {
        const auto &r = doc["ris"];
        check_object(r, "/ris", {"N", "policy", "theta", "phases"});
        if (!r.contains("N"))
            fail("/ris", "missing key 'N'");
        sc.num_elements = std::size_t(count(r, "N", "/ris", 1));
        const std::string kind = r.value("policy", std::string("hopping"));
        if (kind == "hopping")
        {
            if (r.contains("phases"))
                fail("/ris/phases", "not allowed with policy 'hopping'");
            const double theta = r.contains("theta") ? number(r, "theta", "/ris") : 0.0;
            if (!(theta >= 0.0 && theta <= pi))
                fail("/ris/theta", "must lie in [0, pi]");
            sc.policy = PhasePolicy::hopping(theta);
        }
        else if (kind == "static")
        {
            if (r.contains("theta"))
                fail("/ris/theta", "not allowed with policy 'static'");
            if (!r.contains("phases") || !r["phases"].is_array())
                fail("/ris/phases", "static policy needs an array of phases");
            std::vector<double> phases;
            for (std::size_t i = 0; i < r["phases"].size(); ++i)
            {
                const auto &v = r["phases"][i];
                if (!v.is_number() || !(v.get<double>() >= 0.0 && v.get<double>() < 2.0 * pi))
                    fail("/ris/phases/" + std::to_string(i), "must be a number in [0, 2pi)");
                phases.push_back(v.get<double>());
            }
            if (phases.size() != sc.num_elements)
                fail("/ris/phases", "expected " + std::to_string(sc.num_elements) + " phases (ris/N)");
            sc.policy = PhasePolicy::static_phases(std::move(phases));
        }
        else
            fail("/ris/policy", "must be 'static' or 'hopping'");
    }

    if (doc.contains("channels") && doc.contains("environment"))
        fail("", "'channels' and 'environment' are mutually exclusive");
    if (!doc.contains("channels") && !doc.contains("environment"))
        fail("", "one of 'channels' or 'environment' is required");

    if (doc.contains("environment"))
    {
        const auto &e = doc["environment"];
        check_object(e, "/environment", {"alpha", "kappa_db", "sigma2"});
        for (const char *k : {"alpha", "kappa_db"})
            if (!e.contains(k))
                fail("/environment", std::string("missing key '") + k + "'");
        const double alpha = number(e, "alpha", "/environment");
        if (!(alpha >= 0.0 && alpha < 1.0))
            fail("/environment/alpha", "must lie in [0, 1)");
        sc.kappa_db = number(e, "kappa_db", "/environment");
        const double sigma2 = opt_number(e, "sigma2", "/environment").value_or(1.0);
        if (!(sigma2 > 0.0))
            fail("/environment/sigma2", "must be positive");
        sc.environment = EnvSet{alpha, db_to_linear(sc.kappa_db), sigma2};

        if (!doc.contains("geometry"))
            fail("", "parametric scenarios need a 'geometry' section (positions or eta)");
        const auto &g = doc["geometry"];
        check_object(g, "/geometry", {"tx", "rx", "ris_center", "wavelength", "spacing", "grid", "eta"});
        if (g.contains("eta"))
        {
            const double eta = number(g, "eta", "/geometry");
            if (!(eta >= 0.0 && eta <= 1.0))
                fail("/geometry/eta", "must lie in [0, 1]");
            if (sc.num_elements == 1 && eta != 1.0)
                fail("/geometry/eta", "a single-element RIS always has eta = 1");
            sc.eta_override = eta;
        }
        if (g.contains("tx") || g.contains("rx"))
        {
            if (!g.contains("tx") || !g.contains("rx"))
                fail("/geometry", "both 'tx' and 'rx' positions are required");
            GeometryConfig cfg;
            cfg.tx = position(g, "tx", "/geometry");
            cfg.rx = position(g, "rx", "/geometry");
            if (g.contains("ris_center"))
                cfg.ris_center = position(g, "ris_center", "/geometry");
            if (auto w = opt_number(g, "wavelength", "/geometry"))
            {
                if (!(*w > 0.0))
                    fail("/geometry/wavelength", "must be positive");
                cfg.wavelength = *w;
            }
            if (auto s = opt_number(g, "spacing", "/geometry"))
            {
                if (!(*s > 0.0))
                    fail("/geometry/spacing", "must be positive");
                cfg.element_spacing = *s;
            }
            if (cfg.tx == cfg.ris_center)
                fail("/geometry/tx", "coincides with the RIS center");
            if (cfg.rx == cfg.ris_center)
                fail("/geometry/rx", "coincides with the RIS center");
            if (g.contains("grid"))
            {
                const auto &gr = g["grid"];
                if (!gr.is_array() || gr.size() != 2 || !gr[0].is_number_unsigned() || !gr[1].is_number_unsigned())
                    fail("/geometry/grid", "expected [rows, cols]");
                const auto rows = gr[0].get<std::size_t>(), cols = gr[1].get<std::size_t>();
                if (rows == 0 || cols == 0 || rows * cols != sc.num_elements)
                    fail("/geometry/grid", "rows * cols must equal ris/N");
                sc.grid = std::make_pair(rows, cols);
            }
            sc.geometry = cfg;
        }
        else
        {
            for (const char *k : {"ris_center", "wavelength", "spacing", "grid"})
                if (g.contains(k))
                    fail(std::string("/geometry/") + k, "requires 'tx' and 'rx' positions");
            if (!sc.eta_override)
                fail("/geometry", "either 'eta' or 'tx'/'rx' positions are required");
        }
    }
    else
    {
        if (doc.contains("geometry"))
            fail("/geometry", "not used with explicit 'channels'");
        const auto &c = doc["channels"];
        check_object(c, "/channels", {"direct", "tx_ris", "ris_rx"});
        GeneralScenario gs;
        gs.policy = sc.policy;
        if (c.contains("direct") && !c["direct"].is_null())
            gs.direct = rician(c["direct"], "/channels/direct");
        gs.tx_ris = rician_list(c, "tx_ris", "/channels", sc.num_elements);
        gs.ris_rx = rician_list(c, "ris_rx", "/channels", sc.num_elements);
        sc.channels = std::move(gs);
    }

    if (doc.contains("simulation"))
    {
        const auto &s = doc["simulation"];
        check_object(s, "/simulation", {"samples", "trials", "seed", "lags"});
        if (s.contains("samples"))
            sc.simulation.num_samples = std::size_t(count(s, "samples", "/simulation", 1));
        if (s.contains("trials"))
            sc.simulation.num_trials = std::size_t(count(s, "trials", "/simulation", 1));
        if (s.contains("seed"))
            sc.simulation.seed = count(s, "seed", "/simulation", 0);
        if (s.contains("lags"))
        {
            const auto &l = s["lags"];
            try
            {
                if (l.is_string())
                    sc.simulation.lags = parse_lags(l.get<std::string>());
                else if (l.is_array())
                {
                    sc.simulation.lags.clear();
                    for (std::size_t i = 0; i < l.size(); ++i)
                    {
                        if (!l[i].is_number_integer() || l[i].get<std::int64_t>() < 0)
                            fail("/simulation/lags/" + std::to_string(i), "expected a non-negative integer");
                        sc.simulation.lags.push_back(l[i].get<std::int64_t>());
                    }
                }
                else
                    fail("/simulation/lags", "expected an array or a range string");
            }
            catch (const std::invalid_argument &e)
            {
                fail("/simulation/lags", e.what());
            }
        }
        try
        {
            sc.simulation.validate();
        }
        catch (const std::invalid_argument &e)
        {
            fail("/simulation", e.what());
        }
    }

    if (doc.contains("design"))
    {
        const auto &d = doc["design"];
        check_object(d, "/design", {"rho", "tau", "threshold"});
        if (!d.contains("rho") || !d.contains("tau"))
            fail("/design", "both 'rho' and 'tau' are required");
        ProjectRequirement p{number(d, "rho", "/design"), std::int64_t(count(d, "tau", "/design", 1))};
        if (!(p.rho >= 0.0 && p.rho <= 1.0))
            fail("/design/rho", "must lie in [0, 1]");
        sc.requirement = p;
        if (auto t = opt_number(d, "threshold", "/design"))
        {
            if (!(*t > 0.0 && *t < 1.0))
                fail("/design/threshold", "must lie in (0, 1)");
            sc.threshold = *t;
        }
    }
    return sc;
}

riscoh::cli::Scenario riscoh::cli::load_scenario(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ScenarioError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try
    {
        return parse_scenario(buf.str());
    }
    catch (const ScenarioError &e)
    {
        throw ScenarioError(path + ": " + e.what());
    }
}
