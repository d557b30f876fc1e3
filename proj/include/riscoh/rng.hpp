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

#ifndef RISCOH_RNG_HPP
#define RISCOH_RNG_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace riscoh
{
    // Seeds are 64-bit keys. Independent substreams are addressed by folding
    // integer tags (trial index, channel index, purpose tag) into a base key,
    // so every draw depends only on (seed, tags) and never on evaluation order.

    // SplitMix64 finalizer. Bijective on 64-bit words.
    std::uint64_t mix64(std::uint64_t x) noexcept;

    // Derive a substream key from a base key and a list of tags.
    std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) noexcept;

    // Counter-based uniform draw in [0, 1) with 53 random bits.
    // Used where draws are addressed by (k, n) coordinates rather than consumed sequentially.
    double counter_uniform(std::uint64_t key, std::uint64_t counter_a, std::uint64_t counter_b) noexcept;

    // Purpose tags for substream derivation
    namespace stream_tag
    {
        inline constexpr std::uint64_t nlos = 0x6e6c6f73ULL;   // AR(1) innovations
        inline constexpr std::uint64_t phase = 0x70686173ULL;  // RIS phase hopping
        inline constexpr std::uint64_t blocks = 0x626c6b73ULL; // block-fading gains
    }

    // Sequential engine for one substream.
    class Stream
    {
    public:
        explicit Stream(std::uint64_t key) : engine_(mix64(key)) {}

        // Standard circularly symmetric complex Gaussian, CN(0, 1)
        std::complex<double> complex_normal()
        {
            return {normal_(engine_), normal_(engine_)};
        }

        // Uniform on [0, 1)
        double uniform()
        {
            return std::generate_canonical<double, 53>(engine_);
        }

    private:
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 0.70710678118654752440};
    };
}

#endif
