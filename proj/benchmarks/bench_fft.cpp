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

#include "losmimo/numkit/fft.hpp"

using losmimo::numkit::cdouble;

namespace
{
    std::vector<cdouble> random_vec(std::size_t n)
    {
        std::mt19937 rng(n);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<cdouble> v(n);
        for (auto &e : v)
            e = {dist(rng), dist(rng)};
        return v;
    }
} // namespace

static void BM_fft_pow2(benchmark::State &state)
{
    const auto x = random_vec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(losmimo::numkit::fft(x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_fft_pow2)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_fft_bluestein(benchmark::State &state)
{
    // prime-ish lengths exercise the chirp-z path
    const auto x = random_vec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(losmimo::numkit::fft(x));
}
BENCHMARK(BM_fft_bluestein)->Arg(61)->Arg(251)->Arg(1021)->Arg(4093);
