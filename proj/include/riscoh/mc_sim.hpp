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

#ifndef RISCOH_MC_SIM_HPP
#define RISCOH_MC_SIM_HPP

#include "riscoh/acf.hpp"
#include "riscoh/channel.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace riscoh
{
    struct McConfig
    {
        std::size_t num_samples = 4096;
        std::size_t num_trials = 512;
        std::uint64_t seed = 1;
        std::vector<std::int64_t> lags{0};
        unsigned threads = 0; // 0 = hardware concurrency; never changes results

        void validate() const;
    };

    // Independent replicate paths of the equivalent channel
    using PathSet = std::vector<ComplexSeries>;

    // Trial t draws channel c from substream (seed, nlos, t, c) with c = 0 for the
    // direct path, 1..N for g_n and N+1..2N for h_n; phases come from (seed, phase, t).
    PathSet simulate_equivalent(const GeneralScenario &scenario, const McConfig &cfg);

    struct LagEstimate
    {
        std::int64_t tau = 0;
        double value = 0.0;   // real part of the time-and-ensemble average
        double se = 0.0;      // standard error across trial means
        double imag = 0.0;    // diagnostic
        double imag_se = 0.0;
    };

    using AcfEstimate = std::vector<LagEstimate>;

    // Raw (non mean-subtracted) autocorrelation x[k] x^*[k - tau], averaged over
    // k in [tau, K) and over trials. Throws std::invalid_argument on empty input
    // or a lag not smaller than the path length.
    AcfEstimate empirical_acf(const PathSet &paths, std::span<const std::int64_t> lags, unsigned threads = 0);

    struct CorrEstimate
    {
        std::int64_t tau = 0;
        double rho = 0.0;
        double se = 0.0; // delta method over trials
    };

    // empirical_acf normalized by its lag-0 value.
    // Throws std::domain_error when the lag-0 estimate is not positive.
    std::vector<CorrEstimate> empirical_corr(const PathSet &paths, std::span<const std::int64_t> lags, unsigned threads = 0);

    // Runs fn(i) for i in [0, count) on up to `threads` workers
    void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn);
}

#endif
