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

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <thread>

#include "losmimo/bound.hpp"
#include "losmimo/capacity.hpp"
#include "losmimo/channel.hpp"
#include "losmimo/units.hpp"

using namespace losmimo;

TEST_CASE("rate_per_root_snr: fixed points and the threshold equality")
{
    CHECK(rate_per_root_snr(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    // frozen direct evaluation; also the two-mode threshold condition f(8) = f(2)
    CHECK(rate_per_root_snr(8.0) == doctest::Approx(1.12073773218632).epsilon(1e-12));
    CHECK(rate_per_root_snr(8.0) ==
          doctest::Approx(rate_per_root_snr(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(rate_per_root_snr(0.0), std::domain_error);
}

TEST_CASE("rate_per_root_snr: grid maximum sits at the cached constant")
{
    const double c = optimal_mode_snr();
    const double fc = rate_per_root_snr(c);
    for (double x = 0.1; x <= 100.0; x *= 1.03)
        CHECK(rate_per_root_snr(x) <= fc + 1e-13);
}

TEST_CASE("optimal_mode_snr: both defining routes agree")
{
    const double c = optimal_mode_snr();
    CHECK(c == doctest::Approx(3.92155363456750509).epsilon(1e-13));
    CHECK(std::log(1.0 + c) == doctest::Approx(2.0 * c / (1.0 + c)).epsilon(1e-13));
}

TEST_CASE("zeta_threshold: first threshold has the closed form 8/(Nr Nt)")
{
    for (auto [nt, nr] : {std::pair{4, 4}, {16, 16}, {8, 32}})
        CHECK(zeta_threshold(1, nt, nr) ==
              doctest::Approx(8.0 / (static_cast<double>(nt) * nr)).epsilon(1e-11));
}

TEST_CASE("zeta_threshold: strictly increasing for a 16x16 link")
{
    double prev = 0.0;
    for (int n = 1; n <= 15; ++n)
    {
        const double z = zeta_threshold(n, 16, 16);
        CHECK(z > prev);
        prev = z;
    }
}

TEST_CASE("zeta_threshold: adjacent mode counts tie at the threshold")
{
    const double z = zeta_threshold(2, 4, 4);
    // frozen from the bound-continuity oracle
    CHECK(z == doctest::Approx(1.480689032164418).epsilon(1e-9));
    const double b2 = 2.0 * std::log2(1.0 + 16.0 * z / 4.0);
    const double b3 = 3.0 * std::log2(1.0 + 16.0 * z / 9.0);
    CHECK(b2 == doctest::Approx(b3).epsilon(1e-9));
}

TEST_CASE("zeta_threshold: out-of-range index is rejected")
{
    CHECK_THROWS_AS(zeta_threshold(0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(zeta_threshold(4, 4, 4), std::invalid_argument);
}

TEST_CASE("BoundCurve: concurrent first queries agree")
{
    const BoundCurve curve(24, 24);
    std::vector<std::thread> pool;
    std::vector<double> first(4, 0.0);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] { first[t] = curve.thresholds().front(); });
    for (auto &th : pool)
        th.join();
    for (double v : first)
        CHECK(v == first[0]);
    CHECK(first[0] == doctest::Approx(8.0 / 576.0).epsilon(1e-10));
}

TEST_CASE("rho_of_snr: step behavior across thresholds")
{
    const BoundCurve curve(16, 16);
    const auto &z = curve.thresholds();
    REQUIRE(z.size() == 15);
    CHECK(rho_of_snr(z[0] / 2.0, curve) == 1);
    CHECK(rho_of_snr(z[0], curve) == 2); // boundary belongs upward
    CHECK(rho_of_snr(z[14], curve) == 16);
    CHECK(rho_of_snr(z[14] * 100.0, curve) == 16);
}

TEST_CASE("rho_of_snr: agrees with the exhaustive allocation argmax")
{
    const BoundCurve curve(256, 256);
    for (double db = -35.0; db <= 15.0; db += 0.7)
    {
        const double snr = db_to_linear(db);
        const auto oracle = discrete_allocation_oracle(std::sqrt(65536.0 * snr), 256);
        CHECK(rho_of_snr(snr, curve) == oracle.rho);
    }
}

TEST_CASE("upper_bound: closed forms at the extremes")
{
    const BoundCurve curve(256, 256);
    CHECK(upper_bound(10.0, curve) ==
          doctest::Approx(256.0 * std::log2(11.0)).epsilon(1e-12));
    const double tiny = 1e-7; // below zeta_1 = 8/65536... rho = 1
    CHECK(rho_of_snr(tiny, curve) == 1);
    CHECK(upper_bound(tiny, curve) ==
          doctest::Approx(std::log2(1.0 + 65536.0 * tiny)).epsilon(1e-12));
}

TEST_CASE("upper_bound: continuous at every threshold of a 16x16 link")
{
    const BoundCurve curve(16, 16);
    for (int n = 1; n <= 15; ++n)
    {
        const double z = curve.thresholds()[n - 1];
        const double left = n * std::log2(1.0 + 256.0 * z / (n * n));
        const double right = (n + 1.0) * std::log2(1.0 + 256.0 * z / ((n + 1.0) * (n + 1.0)));
        CHECK(left == doctest::Approx(right).epsilon(1e-8));
    }
}

TEST_CASE("upper_bound: nondecreasing in SNR")
{
    const BoundCurve curve(12, 7);
    double prev = 0.0;
    for (double db = -40.0; db <= 30.0; db += 0.25)
    {
        const double b = upper_bound(db_to_linear(db), curve);
        CHECK(b >= prev - 1e-10);
        prev = b;
    }
}

TEST_CASE("rho_tilde and the relaxed bound: branch structure")
{
    const int n = 256;
    const double c = optimal_mode_snr();

    SUBCASE("beamforming branch")
    {
        const double snr = 0.5 * c / (static_cast<double>(n) * n);
        CHECK(rho_tilde(snr, n, n) == 1.0);
        CHECK(upper_bound_relaxed(snr, n, n) ==
              doctest::Approx(std::log2(1.0 + 65536.0 * snr)).epsilon(1e-12));
    }
    SUBCASE("square-root branch equals the compact middle form")
    {
        const double snr = 0.1;
        const double rt = rho_tilde(snr, n, n);
        CHECK(rt == doctest::Approx(256.0 * std::sqrt(0.1 / c)).epsilon(1e-12));
        CHECK(rt == doctest::Approx(40.88).epsilon(2e-3));
        CHECK(rt / n == doctest::Approx(0.16).epsilon(2e-2));
        CHECK(upper_bound_relaxed(snr, n, n) ==
              doctest::Approx(std::sqrt(65536.0 * snr / c) * std::log2(1.0 + c))
                  .epsilon(1e-12));
    }
    SUBCASE("saturated branch")
    {
        CHECK(rho_tilde(10.0, n, n) == 256.0);
    }
}

TEST_CASE("upper_bound_relaxed: dominates the integer bound")
{
    for (auto [nt, nr] : {std::pair{16, 16}, {256, 256}, {8, 64}})
    {
        const BoundCurve curve(nt, nr);
        for (int i = 0; i < 100; ++i)
        {
            const double db = -45.0 + i * (65.0 / 99.0);
            const double snr = db_to_linear(db);
            CHECK(upper_bound_relaxed(snr, nt, nr) >= upper_bound(snr, curve) - 1e-9);
        }
    }
}

TEST_CASE("bound dominance over random geometries")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> counts(1, 8);
    std::uniform_real_distribution<double> spacing_scale(0.2, 3.0);
    std::uniform_real_distribution<double> angle(-1.2, 1.2);
    for (int trial = 0; trial < 25; ++trial)
    {
        ArrayLinkGeometry g;
        g.wavelength = 0.005;
        g.range = 10.0;
        g.n_tx = counts(rng);
        g.n_rx = counts(rng);
        const double d0 = rayleigh_spacing(g.wavelength, g.range, std::max(g.n_tx, g.n_rx));
        g.spacing_tx = d0 * spacing_scale(rng);
        g.spacing_rx = d0 * spacing_scale(rng);
        g.elev_tx = angle(rng);
        g.elev_rx = angle(rng);
        const auto h = exact_channel(g);
        const BoundCurve curve(g.n_tx, g.n_rx);
        for (double db = -30.0; db <= 20.0; db += 5.0)
        {
            const double snr = db_to_linear(db);
            CHECK(upper_bound(snr, curve) >=
                  channel_capacity(h, snr).capacity_bits - 1e-8);
        }
    }
}

TEST_CASE("discrete_allocation_oracle: boundary and limits")
{
    SUBCASE("X = sqrt(8) is the two-mode boundary")
    {
        const double x = std::sqrt(8.0);
        const double v1 = std::log2(1.0 + 8.0);
        const double v2 = 2.0 * std::log2(1.0 + 2.0);
        CHECK(v1 == doctest::Approx(v2).epsilon(1e-14));
        const auto best = discrete_allocation_oracle(x, 2);
        CHECK(best.value == doctest::Approx(v1).epsilon(1e-14));
    }
    SUBCASE("small X collapses to beamforming")
    {
        CHECK(discrete_allocation_oracle(0.05, 16).rho == 1);
    }
    SUBCASE("matches the bound at the matching SNR")
    {
        const BoundCurve curve(16, 16);
        for (double x : {0.5, 3.0, 10.0, 40.0})
        {
            const double snr = x * x / 256.0;
            CHECK(discrete_allocation_oracle(x, 16).value ==
                  doctest::Approx(upper_bound(snr, curve)).epsilon(1e-10));
        }
    }
}

TEST_CASE("discrete_allocation_oracle: agrees with the continuous simplex search")
{
    // grid search over {x_i >= 0, sum = X} maximizing sum log2(1 + x_i^2)
    const auto simplex_grid = [](double x_total, int n, int divisions)
    {
        double best = 0.0;
        if (n == 1)
            return std::log2(1.0 + x_total * x_total);
        for (int i = 0; i <= divisions; ++i)
        {
            const double x1 = x_total * i / divisions;
            if (n == 2)
            {
                const double x2 = x_total - x1;
                best = std::max(best, std::log2(1.0 + x1 * x1) +
                                          std::log2(1.0 + x2 * x2));
            }
            else
            {
                for (int j = 0; i + j <= divisions; ++j)
                {
                    const double x2 = x_total * j / divisions;
                    const double x3 = x_total - x1 - x2;
                    best = std::max(best, std::log2(1.0 + x1 * x1) +
                                              std::log2(1.0 + x2 * x2) +
                                              std::log2(1.0 + x3 * x3));
                }
            }
        }
        return best;
    };

    for (int n : {2, 3})
        for (double x : {0.5, std::sqrt(8.0), 10.0})
        {
            const double oracle = discrete_allocation_oracle(x, n).value;
            const double grid = simplex_grid(x, n, 600);
            CHECK(grid <= oracle + 1e-9); // discrete optimum is the true max
            CHECK(oracle - grid < 6.0 * x / 600.0 + 1e-6);
        }
}

TEST_CASE("averaging_process: fixed point and a single step")
{
    const auto fixed = averaging_process({1.0, 1.0, 1.0}, 3);
    for (double v : fixed.state)
        CHECK(v == 1.0);
    for (double s : fixed.sum_sq)
        CHECK(s == doctest::Approx(3.0));

    const auto one = averaging_process({2.0, 0.0}, 1);
    CHECK(one.state[0] == 1.0);
    CHECK(one.state[1] == 1.0);
    CHECK(one.sum_sq[0] == doctest::Approx(4.0));
    CHECK(one.sum_sq[1] == doctest::Approx(2.0));
}

TEST_CASE("averaging_process: contraction and exact sum preservation")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> quant(-1024, 1024);
    for (int trial = 0; trial < 50; ++trial)
    {
        // dyadic entries keep every mean exactly representable
        std::vector<double> x(8);
        double mean = 0.0;
        for (double &v : x)
        {
            v = quant(rng) / 1024.0;
            mean += v;
        }
        mean /= x.size();
        for (double &v : x)
            v -= mean; // zero-mean within dyadic arithmetic

        double sum0 = 0.0;
        for (double v : x)
            sum0 += v;
        // 30 iterations keep every intermediate dyadic value exact
        const auto traj = averaging_process(x, 30);
        CHECK(traj.sum == sum0);

        const double factor = 1.0 - 1.0 / 16.0; // 1 - 1/(2N)
        for (std::size_t t = 1; t < traj.sum_sq.size(); ++t)
            CHECK(traj.sum_sq[t] <= factor * traj.sum_sq[t - 1] + 1e-12);
        CHECK(traj.sum_sq.back() <=
              std::pow(factor, 30) * traj.sum_sq.front() + 1e-12);
    }
}
