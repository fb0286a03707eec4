// SPDX-License-Identifier: Apache-2.0
//
// losmimo - line-of-sight MIMO array planning and transceiver toolkit
// Copyright (C) 2026 losmimo contributors
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

#include <benchmark/benchmark.h>

#include <random>

#include "losmimo/numkit/toeplitz.hpp"

using losmimo::numkit::cdouble;
using losmimo::numkit::ComplexMat;

namespace
{
    std::vector<cdouble> random_vec(std::size_t n, unsigned seed)
    {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<cdouble> v(n);
        for (auto &e : v)
            e = {dist(rng), dist(rng)};
        return v;
    }
} // namespace

// circulant-embedded FFT apply: O(N log N), pulls ahead of the dense
// product as N grows
static void BM_toeplitz_fft(benchmark::State &state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto col = random_vec(n, 1);
    auto row = random_vec(n, 2);
    row[0] = col[0];
    const auto x = random_vec(n, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(losmimo::numkit::toeplitz_apply(col, row, x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_toeplitz_fft)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

static void BM_toeplitz_dense(benchmark::State &state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto col = random_vec(n, 1);
    auto row = random_vec(n, 2);
    row[0] = col[0];
    const ComplexMat t = losmimo::numkit::toeplitz_dense(col, row);
    const auto x = random_vec(n, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(t.apply(x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_toeplitz_dense)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
