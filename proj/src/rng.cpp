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

#include "riscoh/rng.hpp"

std::uint64_t riscoh::mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t riscoh::derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) noexcept
{
    std::uint64_t h = mix64(base);
    for (auto t : tags)
        h = mix64(h ^ mix64(t + 0x632be59bd9b4e019ULL));
    return h;
}

double riscoh::counter_uniform(std::uint64_t key, std::uint64_t counter_a, std::uint64_t counter_b) noexcept
{
    // Two rounds so that neighbouring counters decorrelate fully
    std::uint64_t h = mix64(key ^ mix64(counter_a));
    h = mix64(h ^ mix64(counter_b ^ 0xd1b54a32d192ed03ULL));
    return double(h >> 11) * 0x1.0p-53;
}
