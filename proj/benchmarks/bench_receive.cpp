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

#include <cmath>
#include <random>

#include "losmimo/transceiver.hpp"

using namespace losmimo;

namespace
{
    TransceiverMatrices make_tm(int n)
    {
        const auto geom = ArrayLinkGeometry::rayleigh(0.005, 10.0, n, n,
                                                      std::acos(0.5));
        return build_transceiver(geom, ChannelModel::approx);
    }

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

static void BM_receive_fast(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const auto tm = make_tm(n);
    const auto y = random_vec(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(fast_receive(tm, y));
    state.SetComplexityN(n);
}
BENCHMARK(BM_receive_fast)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_receive_dense(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const auto tm = make_tm(n);
    const auto y = random_vec(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(dense_receive(tm, y));
    state.SetComplexityN(n);
}
BENCHMARK(BM_receive_dense)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

BENCHMARK_MAIN();
