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

// Acceptance checks, one PASS/FAIL line per criterion

#include "riscoh/acf.hpp"
#include "riscoh/block_fading.hpp"
#include "riscoh/channel.hpp"
#include "riscoh/design.hpp"
#include "riscoh/geometry.hpp"
#include "riscoh/mc_sim.hpp"
#include "riscoh/numeric.hpp"
#include "riscoh/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace riscoh;
using cd = std::complex<double>;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    std::string fmt(const char *f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof(buf), f, args...);
        return buf;
    }

    SimplifiedScenario simplified(std::size_t n, double kappa, double eta, double alpha)
    {
        SimplifiedScenario s;
        s.num_elements = n;
        s.kappa = kappa;
        s.eta = eta;
        s.alpha = alpha;
        return s;
    }

    McConfig mc(std::size_t trials, std::size_t samples, std::uint64_t seed, std::vector<std::int64_t> lags)
    {
        McConfig c;
        c.num_trials = trials;
        c.num_samples = samples;
        c.seed = seed;
        c.lags = std::move(lags);
        return c;
    }

    std::vector<std::int64_t> lag_range(std::int64_t a, std::int64_t b)
    {
        std::vector<std::int64_t> v;
        for (auto t = a; t <= b; ++t)
            v.push_back(t);
        return v;
    }

    Outcome ac1()
    {
        std::mt19937_64 rng(101);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> n_dist(1, 512);
        std::uniform_int_distribution<std::int64_t> tau_dist(1, 2000);
        std::size_t tuples = 0, failures = 0;
        double worst = 0.0;
        while (tuples < 2000)
        {
            const auto n = n_dist(rng);
            const double kappa = db_to_linear(-20.0 + 40.0 * u01(rng));
            const double eta = n == 1 ? 1.0 : u01(rng);
            const double alpha = 0.9999 * u01(rng);
            const auto tau = tau_dist(rng);
            const auto [lo, hi] = corr_limits(simplified(n, kappa, eta, alpha), tau);
            const ProjectRequirement p{lo + (hi - lo) * u01(rng), tau};
            if (!(p.rho > 0.0) || !feasible_theta(p, n, kappa, eta, alpha).feasible)
                continue;
            ++tuples;
            const double theta = design_theta(p, n, kappa, eta, alpha);
            const double err = std::abs(corr_coeff(simplified(n, kappa, eta, alpha), theta, tau) - p.rho);
            worst = std::max(worst, err);
            if (!(err <= 1e-9))
                ++failures;
        }
        return {failures == 0, fmt("%zu feasible tuples, max |rho - target| = %.3g, %zu above 1e-9", tuples, worst, failures)};
    }

    Outcome ac2()
    {
        std::mt19937_64 rng(202);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_int_distribution<std::int64_t> tau_dist(1, 2000);
        std::size_t tuples = 0, attempts = 0, failures = 0;
        while (tuples < 2000 && attempts < 1000000)
        {
            ++attempts;
            const double theta = 0.999 * pi * u01(rng);
            const double kappa = db_to_linear(-20.0 + 40.0 * u01(rng));
            const double eta = 0.001 + 0.999 * u01(rng);
            const double alpha = 0.9999 * u01(rng);
            const ProjectRequirement p{u01(rng), tau_dist(rng)};
            if (!(p.rho > 0.0) || !feasible_n(p, theta, kappa, eta, alpha).feasible)
                continue;
            ++tuples;
            const auto n = design_n(p, theta, kappa, eta, alpha);
            const double sc = sinc(theta);
            const double at_n = corr_coeff_from(double(n) * kappa * eta, kappa, alpha, sc * sc, p.tau);
            const double at_next = corr_coeff_from(double(n + 1) * kappa * eta, kappa, alpha, sc * sc, p.tau);
            if (!(n >= 1 && at_n <= p.rho && p.rho <= at_next))
                ++failures;
        }
        const auto anchor = design_n({0.9, 50}, 0.0, db_to_linear(-6.0), 1.0, 0.992);
        return {failures == 0 && anchor == 9 && tuples >= 1000,
                fmt("%zu feasible tuples, %zu bracket violations; anchor (-6 dB, 0.992, 0.9 at 50) gives N = %llu",
                    tuples, failures, (unsigned long long)anchor)};
    }

    Outcome ac3()
    {
        const std::size_t points = 100000;
        double worst = 0.0;
        for (std::size_t i = 0; i < points; ++i)
        {
            const double y = double(i) / double(points - 1);
            worst = std::max(worst, std::abs(sinc(inv_sinc(y)) - y));
        }
        const double mid = std::abs(inv_sinc(2.0 / pi) - pi / 2.0);
        return {worst <= 1e-12 && mid <= 1e-12,
                fmt("%zu grid points, max |sinc(inv_sinc(y)) - y| = %.3g; |inv_sinc(2/pi) - pi/2| = %.3g", points, worst, mid)};
    }

    GeneralScenario random_general(std::mt19937_64 &rng, bool hopping)
    {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> n_dist(1, 4);
        const auto link = [&](double max_amp)
        {
            return RicianParams{std::polar(max_amp * u01(rng), 2.0 * pi * u01(rng)), 0.98 * u01(rng), 0.2 + 1.8 * u01(rng)};
        };
        GeneralScenario g;
        const auto n = n_dist(rng);
        g.direct = link(1.5);
        std::vector<double> phases;
        for (std::size_t i = 0; i < n; ++i)
        {
            g.tx_ris.push_back(link(1.5));
            g.ris_rx.push_back(link(1.5));
            phases.push_back(2.0 * pi * u01(rng));
        }
        g.policy = hopping ? PhasePolicy::hopping(pi * u01(rng)) : PhasePolicy::static_phases(phases);
        return g;
    }

    Outcome ac4()
    {
        std::mt19937_64 rng(404);
        const auto lags = lag_range(0, 10);
        std::size_t se_fail = 0, abs_fail = 0, checks = 0;
        double worst_z = 0.0, worst_abs = 0.0;
        for (int i = 0; i < 10; ++i)
        {
            const auto g = random_general(rng, i % 2 == 1);
            const auto est = empirical_acf(simulate_equivalent(g, mc(512, 4096, 4000 + i, lags)), lags);
            const double r0 = acf_general(g, 0);
            for (const auto &e : est)
            {
                const double r = acf_general(g, e.tau);
                const double z = std::abs(e.value - r) / e.se;
                const double dev = std::abs(e.value / est[0].value - r / r0);
                worst_z = std::max(worst_z, z);
                worst_abs = std::max(worst_abs, dev);
                se_fail += z > 3.0;
                abs_fail += dev > 0.02;
                ++checks;
            }
        }
        return {se_fail == 0 && abs_fail == 0,
                fmt("10 scenarios x 11 lags: max z = %.2f (%zu of %zu beyond 3 SE), max normalized deviation = %.4f (%zu beyond 0.02)",
                    worst_z, se_fail, checks, worst_abs, abs_fail)};
    }

    double fast_fading_rho1 = std::nan("");

    Outcome ac5()
    {
        const std::size_t n = 16;
        const double kappa = 1.0, alpha = 0.95, sigma2 = 1.0;
        std::mt19937_64 rng(505);
        std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
        std::vector<cd> gv, hv;
        GeneralScenario g;
        for (std::size_t i = 0; i < n; ++i)
        {
            gv.push_back(std::polar(1.0, ph(rng)));
            hv.push_back(std::polar(std::sqrt(kappa * sigma2), ph(rng)));
            g.tx_ris.push_back({gv.back(), 0.0, 0.0});
            g.ris_rx.push_back({hv.back(), alpha, sigma2});
        }
        auto s = simplified(n, kappa, compute_eta(gv, hv), alpha);
        s.g_norm2 = double(n);

        const auto lags = lag_range(0, 50);
        std::string detail = fmt("eta = %.4f;", s.eta);
        bool pass = true;
        std::uint64_t seed = 5000;
        for (double theta : {0.0, 1.0, pi})
        {
            g.policy = PhasePolicy::hopping(theta);
            const auto est = empirical_corr(simulate_equivalent(g, mc(512, 4096, seed++, lags)), lags);
            double worst = 0.0;
            for (const auto &e : est)
                worst = std::max(worst, std::abs(e.rho - corr_coeff(s, theta, e.tau)));
            if (theta == pi)
                fast_fading_rho1 = est[1].rho;
            pass = pass && worst <= 0.02;
            detail += fmt(" theta = %.4g: max |rho_hat - rho| = %.4f;", theta, worst);
        }
        detail += " 2097152 products per lag";
        return {pass, detail};
    }

    Outcome ac6()
    {
        return {std::abs(fast_fading_rho1) <= 0.01, fmt("|rho_hat[1]| = %.4g at theta = pi, 2097152 products per lag", std::abs(fast_fading_rho1))};
    }

    Outcome ac7()
    {
        double worst_sym = 0.0;
        for (std::size_t n : {1, 4, 16, 64, 100})
            worst_sym = std::max(worst_sym, std::abs(eta_for(GeometryConfig{}, n) - 1.0));

        std::mt19937_64 rng(707);
        std::uniform_real_distribution<double> coord(-50.0, 50.0), u01(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> n_dist(1, 256);
        std::size_t out_of_range = 0;
        double lo = 1.0, hi = 0.0;
        for (int i = 0; i < 10000; ++i)
        {
            GeometryConfig cfg;
            cfg.tx = {coord(rng), coord(rng), coord(rng)};
            cfg.rx = {coord(rng), coord(rng), coord(rng)};
            cfg.ris_center = {coord(rng), coord(rng), coord(rng)};
            cfg.wavelength = 0.01 + 0.5 * u01(rng);
            cfg.element_spacing = cfg.wavelength * (0.1 + u01(rng));
            const double eta = eta_for(cfg, n_dist(rng));
            lo = std::min(lo, eta);
            hi = std::max(hi, eta);
            out_of_range += !(eta >= 0.0 && eta <= 1.0);
        }
        return {worst_sym <= 1e-12 && out_of_range == 0,
                fmt("symmetric receiver: max |eta - 1| = %.3g; 10000 random geometries in [%.3g, %.6f], %zu outside [0, 1]",
                    worst_sym, lo, hi, out_of_range)};
    }

    Outcome ac8()
    {
        const RicianParams p{cd(1.2, -0.7), 0.9, 0.8};
        const std::size_t trials = 256, samples = 4096;
        std::vector<double> re(trials), im(trials), pw(trials);
        for (std::size_t t = 0; t < trials; ++t)
        {
            const auto x = generate_rician(p, samples, derive_seed(808, {t}));
            std::vector<double> a(samples), b(samples), c(samples);
            for (std::size_t k = 0; k < samples; ++k)
            {
                a[k] = x[k].real();
                b[k] = x[k].imag();
                c[k] = std::norm(x[k]);
            }
            re[t] = pairwise_sum(a) / double(samples);
            im[t] = pairwise_sum(b) / double(samples);
            pw[t] = pairwise_sum(c) / double(samples);
        }
        const auto mean_se = [](const std::vector<double> &v)
        {
            const double m = pairwise_sum(v) / double(v.size());
            double ss = 0.0;
            for (double x : v)
                ss += (x - m) * (x - m);
            return std::pair{m, std::sqrt(ss / double(v.size() - 1) / double(v.size()))};
        };
        const auto [mr, sr] = mean_se(re);
        const auto [mi, si] = mean_se(im);
        const auto [mp, sp] = mean_se(pw);
        (void)sp;
        const double zr = std::abs(mr - p.los_mean.real()) / sr;
        const double zi = std::abs(mi - p.los_mean.imag()) / si;
        const double target = std::norm(p.los_mean) + p.sigma2;
        const double rel = std::abs(mp - target) / target;
        return {zr <= 3.0 && zi <= 3.0 && rel <= 0.01,
                fmt("%zu samples: mean off by %.2f SE (re), %.2f SE (im); power relative error %.4f", trials * samples, zr, zi, rel)};
    }

    Outcome ac9()
    {
        GeometryConfig cfg;
        cfg.rx = {10, 2, 0};
        const std::size_t n = 100;
        const double eta = eta_for(cfg, n);
        double worst_low = 0.0;
        bool monotone = true;
        for (double alpha : {0.992, 0.999, 1.0 - 1.12e-4})
        {
            worst_low = std::max(worst_low, std::abs(corr_coeff(simplified(n, db_to_linear(-60.0), eta, alpha), 0.0, 100) - std::pow(alpha, 100.0)));
            for (double theta : {0.0, 0.5, 1.0})
            {
                double prev = -1.0;
                for (int i = 0; i <= 180; ++i)
                {
                    const double r = corr_coeff(simplified(n, db_to_linear(-60.0 + 0.5 * i), eta, alpha), theta, 100);
                    monotone = monotone && r >= prev;
                    prev = r;
                }
            }
        }

        std::mt19937_64 rng(909);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> n_dist(1, 512);
        double worst_asym = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const auto m = n_dist(rng);
            const double kappa = db_to_linear(-20.0 + 40.0 * u01(rng));
            const double e = m == 1 ? 1.0 : u01(rng);
            const double a = 0.9999 * u01(rng);
            const double x = double(m) * kappa * e;
            worst_asym = std::max(worst_asym, std::abs(corr_coeff(simplified(m, kappa, e, a), 0.0, 1000000) - x / (x + 1.0)));
        }
        return {worst_low <= 1e-6 && monotone && worst_asym <= 1e-9,
                fmt("eta = %.4g: max |rho[100] - alpha^100| at -60 dB = %.3g; monotone in kappa: %s; max asymptote error at tau = 1e6 = %.3g",
                    eta, worst_low, monotone ? "yes" : "no", worst_asym)};
    }

    Outcome ac10()
    {
        const auto c = coherence_lag(simplified(1, 0.0, 1.0, 0.9), 0.0, 0.5);

        const std::size_t blocks = 10000;
        const std::uint64_t lag = 8;
        double within = 0.0;
        std::string means;
        bool means_ok = true;
        std::uint64_t seed = 1010;
        for (double mean : {0.5, 2.0})
        {
            const auto tr = generate_blocks({lag, ExponentialGain{mean}, blocks}, seed++);
            for (std::size_t b = 0; b < blocks; ++b)
                for (std::size_t i = 0; i < lag; ++i)
                {
                    const double d = tr.gain[b * lag + i] - tr.gain[b * lag];
                    within += d * d;
                }
            const double m = pairwise_sum(tr.block_gain) / double(blocks);
            double ss = 0.0;
            for (double x : tr.block_gain)
                ss += (x - m) * (x - m);
            const double z = std::abs(m - mean) / std::sqrt(ss / double(blocks - 1) / double(blocks));
            means_ok = means_ok && z <= 3.0;
            means += fmt(" exponential mean %.3g: %.2f SE;", mean, z);
        }
        const auto flat = generate_blocks({lag, ConstantGain{1.7}, blocks}, seed);
        const bool flat_ok = std::all_of(flat.gain.begin(), flat.gain.end(), [](double x) { return x == 1.7; });
        return {!c.unbounded && c.lag == 6 && within == 0.0 && means_ok && flat_ok,
                fmt("coherence lag = %llu; within-block variance = %g;%s constant gain exact: %s",
                    (unsigned long long)c.lag, within, means.c_str(), flat_ok ? "yes" : "no")};
    }

    struct Criterion
    {
        const char *id;
        const char *title;
        double budget_s;
        std::function<Outcome()> run;
    };
}

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "theta design round trip", 5.0, ac1},
        {"AC2", "N design bracketing", 5.0, ac2},
        {"AC3", "inverse sinc accuracy", 2.0, ac3},
        {"AC4", "general ACF against Monte Carlo", 120.0, ac4},
        {"AC5", "simplified correlation against Monte Carlo", 60.0, ac5},
        {"AC6", "fast-fading limit", 60.0, ac6},
        {"AC7", "orthogonality measure", 60.0, ac7},
        {"AC8", "Rician moments", 60.0, ac8},
        {"AC9", "limit behaviors", 60.0, ac9},
        {"AC10", "block model", 60.0, ac10},
    };

    int failed = 0;
    for (const auto &c : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("%s %s %s: %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                    c.budget_s, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - std::size_t(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
