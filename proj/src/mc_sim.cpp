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

#include "riscoh/mc_sim.hpp"
#include "riscoh/numeric.hpp"
#include "riscoh/ris_policy.hpp"
#include "riscoh/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace
{
    // Mean and standard error of a set of replicate values
    std::pair<double, double> mean_se(std::span<const double> v)
    {
        const double n = double(v.size());
        const double mean = riscoh::pairwise_sum(v) / n;
        if (v.size() < 2)
            return {mean, 0.0};
        std::vector<double> dev(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            dev[i] = (v[i] - mean) * (v[i] - mean);
        const double var = riscoh::pairwise_sum(dev) / (n - 1.0);
        return {mean, std::sqrt(var / n)};
    }

    struct TrialMeans
    {
        // [lag][trial]
        std::vector<std::vector<double>> re;
        std::vector<std::vector<double>> im;
    };

    TrialMeans trial_means(const riscoh::PathSet &paths, std::span<const std::int64_t> lags, unsigned threads)
    {
        if (paths.empty())
            throw std::invalid_argument("No sample paths given.");
        if (lags.empty())
            throw std::invalid_argument("No lags given.");
        const std::size_t K = paths.front().size();
        for (const auto &p : paths)
            if (p.size() != K)
                throw std::invalid_argument("All sample paths must have the same length.");
        for (auto tau : lags)
            if (tau < 0 || std::size_t(tau) >= K)
                throw std::invalid_argument("Lag " + std::to_string(tau) + " is outside [0, " + std::to_string(K) + ").");

        TrialMeans out;
        out.re.assign(lags.size(), std::vector<double>(paths.size()));
        out.im.assign(lags.size(), std::vector<double>(paths.size()));

        riscoh::parallel_for(paths.size(), threads, [&](std::size_t t)
        {
            const auto &x = paths[t];
            std::vector<double> re(K), im(K);
            for (std::size_t l = 0; l < lags.size(); ++l)
            {
                const std::size_t tau = std::size_t(lags[l]);
                const std::size_t count = K - tau;
                for (std::size_t k = tau; k < K; ++k)
                {
                    const auto prod = x[k] * std::conj(x[k - tau]);
                    re[k - tau] = prod.real();
                    im[k - tau] = prod.imag();
                }
                out.re[l][t] = riscoh::pairwise_sum(std::span<const double>(re.data(), count)) / double(count);
                out.im[l][t] = riscoh::pairwise_sum(std::span<const double>(im.data(), count)) / double(count);
            }
        });
        return out;
    }
}

void riscoh::McConfig::validate() const
{
    if (num_samples == 0)
        throw std::invalid_argument("Number of samples must be at least 1.");
    if (num_trials == 0)
        throw std::invalid_argument("Number of trials must be at least 1.");
    for (auto tau : lags)
    {
        if (tau < 0)
            throw std::invalid_argument("Lags must be non-negative.");
        if (std::size_t(tau) >= num_samples)
            throw std::invalid_argument("Number of samples must exceed the largest lag.");
    }
}

void riscoh::parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn)
{
    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = unsigned(std::min<std::size_t>(workers, count));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]
    {
        for (std::size_t i = next++; i < count; i = next++)
        {
            try
            {
                fn(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto &th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

riscoh::PathSet riscoh::simulate_equivalent(const GeneralScenario &scenario, const McConfig &cfg)
{
    scenario.validate();
    cfg.validate();

    const std::size_t N = scenario.element_count();
    const std::size_t K = cfg.num_samples;

    PathSet paths(cfg.num_trials);
    parallel_for(cfg.num_trials, cfg.threads, [&](std::size_t t)
    {
        auto channel_seed = [&](std::size_t c) { return derive_seed(cfg.seed, {stream_tag::nlos, t, c}); };

        ComplexSeries heq(K, Complex(0.0, 0.0));
        if (scenario.direct)
            heq = generate_rician(*scenario.direct, K, channel_seed(0));

        std::vector<ComplexSeries> g(N), h(N);
        for (std::size_t n = 0; n < N; ++n)
        {
            g[n] = generate_rician(scenario.tx_ris[n], K, channel_seed(1 + n));
            h[n] = generate_rician(scenario.ris_rx[n], K, channel_seed(1 + N + n));
        }

        const std::uint64_t phase_key = derive_seed(cfg.seed, {stream_tag::phase, t});
        for (std::size_t k = 0; k < K; ++k)
        {
            const auto psi = reflection_coefficients(sample_phases(scenario.policy, N, k, phase_key));
            Complex acc = 0.0;
            for (std::size_t n = 0; n < N; ++n)
                acc += g[n][k] * h[n][k] * psi[n];
            heq[k] += acc;
        }
        paths[t] = std::move(heq);
    });
    return paths;
}

riscoh::AcfEstimate riscoh::empirical_acf(const PathSet &paths, std::span<const std::int64_t> lags, unsigned threads)
{
    const auto means = trial_means(paths, lags, threads);

    AcfEstimate out;
    out.reserve(lags.size());
    for (std::size_t l = 0; l < lags.size(); ++l)
    {
        const auto [re, re_se] = mean_se(means.re[l]);
        const auto [im, im_se] = mean_se(means.im[l]);
        out.push_back({lags[l], re, re_se, im, im_se});
    }
    return out;
}

std::vector<riscoh::CorrEstimate> riscoh::empirical_corr(const PathSet &paths, std::span<const std::int64_t> lags, unsigned threads)
{
    std::vector<std::int64_t> all{0};
    all.insert(all.end(), lags.begin(), lags.end());
    const auto means = trial_means(paths, all, threads);

    const auto [r0, r0_se] = mean_se(means.re[0]);
    (void)r0_se;
    if (!(r0 > 0.0))
        throw std::domain_error("Lag-0 autocorrelation estimate is not positive.");

    const std::size_t T = paths.size();
    std::vector<CorrEstimate> out;
    out.reserve(lags.size());
    std::vector<double> lin(T);
    for (std::size_t l = 0; l < lags.size(); ++l)
    {
        if (lags[l] == 0)
        {
            out.push_back({0, 1.0, 0.0});
            continue;
        }
        const auto &x = means.re[l + 1];
        const double rho = pairwise_sum(x) / double(T) / r0;
        for (std::size_t t = 0; t < T; ++t)
            lin[t] = (x[t] - rho * means.re[0][t]) / r0;
        out.push_back({lags[l], rho, mean_se(lin).second});
    }
    return out;
}
