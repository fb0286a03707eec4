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
//
// Acceptance suite. Each criterion prints one PASS/FAIL line with the
// observed numbers; run a single criterion by passing its index, or all of
// them with no arguments. Exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "losmimo/bound.hpp"
#include "losmimo/capacity.hpp"
#include "losmimo/channel.hpp"
#include "losmimo/experiments.hpp"
#include "losmimo/numkit/eig.hpp"
#include "losmimo/numkit/special.hpp"
#include "losmimo/planner.hpp"
#include "losmimo/transceiver.hpp"
#include "losmimo/units.hpp"

using namespace losmimo;

namespace
{
    struct Check
    {
        bool ok = true;
        std::string detail;

        void expect(bool cond, const std::string &what)
        {
            if (!cond)
            {
                ok = false;
                detail += (detail.empty() ? "" : "; ") + what;
            }
        }
    };

    std::string num(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return buf;
    }

    double vandermonde_capacity(double eta, int n, double snr)
    {
        const auto gains =
            numkit::hermitian_eigenvalues(vandermonde_gram({eta, n, n}));
        std::vector<double> clipped(gains.size());
        for (std::size_t i = 0; i < gains.size(); ++i)
            clipped[i] = std::max(gains[i], 0.0);
        return waterfill(clipped, snr).capacity_bits;
    }

    // 1. zeta_1 = 8 / (Nr Nt) for three antenna configurations
    Check criterion_1()
    {
        Check c;
        for (auto [nt, nr] : {std::pair{4, 4}, {16, 16}, {8, 32}})
        {
            const double z = zeta_threshold(1, nt, nr);
            const double expect = 8.0 / (static_cast<double>(nt) * nr);
            c.expect(std::abs(z - expect) <= 1e-10 * expect,
                     "zeta1(" + std::to_string(nt) + "," + std::to_string(nr) +
                         ") = " + num(z) + " vs " + num(expect));
        }
        return c;
    }

    // 2. the constant c from the Lambert route and its stationarity identity
    Check criterion_2()
    {
        Check c;
        const double cc = -1.0 - 2.0 / numkit::lambert_w0(-2.0 * std::exp(-2.0));
        c.expect(std::abs(cc - 3.9215) <= 5e-4, "lambert route c = " + num(cc));
        const double resid = std::log(1.0 + cc) - 2.0 * cc / (1.0 + cc);
        c.expect(std::abs(resid) <= 1e-12, "stationarity residual = " + num(resid));
        c.expect(std::abs(optimal_mode_snr() - cc) <= 1e-14, "cached constant differs");
        return c;
    }

    // 3. Table rows at N = 256
    Check criterion_3()
    {
        Check c;
        const auto rows = experiments::run_table1(256, {-20.0, -10.0, 0.0, 10.0});
        const double eta_ref[] = {0.05, 0.16, 0.5, 1.0};
        const double theta_ref[] = {87.1, 80.8, 59.7, 0.0};
        const double parallel_ref[] = {12.4, 37.5, 86.1, 100.0};
        const double svd_ref[] = {98.6, 99.5, 99.8, 100.0};
        const double mrc_ref[] = {89.1, 96.4, 99.1, 100.0};
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            const auto &r = rows[i];
            c.expect(std::abs(r.eta - eta_ref[i]) <= 0.005,
                     "eta@" + num(r.snr_db) + " = " + num(r.eta));
            c.expect(std::abs(r.theta_r_deg - theta_ref[i]) <= 0.2,
                     "theta@" + num(r.snr_db) + " = " + num(r.theta_r_deg));
            c.expect(std::abs(r.parallel_pct - parallel_ref[i]) <= 0.5,
                     "parallel@" + num(r.snr_db) + " = " + num(r.parallel_pct));
            c.expect(std::abs(r.svd_pct - svd_ref[i]) <= 0.5,
                     "svd@" + num(r.snr_db) + " = " + num(r.svd_pct));
            c.expect(std::abs(r.mrc_pct - mrc_ref[i]) <= 2.0,
                     "mrc@" + num(r.snr_db) + " = " + num(r.mrc_pct));
        }
        return c;
    }

    // 4. Table rows at N = 32
    Check criterion_4()
    {
        Check c;
        const auto rows = experiments::run_table1(32, {-20.0, -10.0, 0.0, 10.0});
        const double svd_ref[] = {95.0, 97.1, 99.1, 100.0};
        const double mrc_ref[] = {37.5, 84.0, 95.2, 100.0};
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            c.expect(std::abs(rows[i].svd_pct - svd_ref[i]) <= 0.5,
                     "svd@" + num(rows[i].snr_db) + " = " + num(rows[i].svd_pct));
            c.expect(std::abs(rows[i].mrc_pct - mrc_ref[i]) <= 2.0,
                     "mrc@" + num(rows[i].snr_db) + " = " + num(rows[i].mrc_pct));
        }
        return c;
    }

    // 5. three-spacing scheme vs the free eta sweep at -5 dB, N = 256
    Check criterion_5()
    {
        Check c;
        const auto three = experiments::run_three_spacing(256, {-5.0});
        c.expect(std::abs(three[0].scheme_pct - 55.0) <= 5.0,
                 "three-spacing share = " + num(three[0].scheme_pct));

        auto grid = experiments::default_eta_grid(256, 17);
        grid.push_back(continuous_eta(db_to_linear(-5.0), 256, 256));
        const auto sweep = experiments::run_eta_sweep(256, {-5.0}, grid);
        double envelope = 0.0;
        for (const auto &r : sweep)
            envelope = std::max(envelope, r.share_pct);
        c.expect(envelope >= 97.0, "eta-sweep envelope = " + num(envelope));
        return c;
    }

    // 6. radial plan golden numbers and the guaranteed ratio over its range
    Check criterion_6()
    {
        Check c;
        const auto plan = geometric_plan(0.48, 256, 256, db_to_linear(-10.0));
        c.expect(plan.count == 3, "k = " + std::to_string(plan.count));
        c.expect(std::abs(rad_to_deg(plan.angles[0]) - 0.0) <= 1e-9, "angle0");
        c.expect(std::abs(rad_to_deg(plan.angles[1]) - 61.0) <= 1.0,
                 "angle1 = " + num(rad_to_deg(plan.angles[1])));
        c.expect(std::abs(rad_to_deg(plan.angles[2]) - 77.0) <= 1.0,
                 "angle2 = " + num(rad_to_deg(plan.angles[2])));
        c.expect(std::abs(plan.guarantee - 0.959) <= 0.001,
                 "guarantee = " + num(plan.guarantee));

        for (int i = 0; i < 200; ++i)
        {
            const double db = -10.0 + i * (45.0 / 199.0);
            const double snr = db_to_linear(db);
            const auto choice = select_configuration(plan, snr);
            const double ratio = equal_gain_rate(choice.eta, 256, 256, snr) /
                                 upper_bound_relaxed(snr, 256, 256);
            if (!(ratio >= plan.guarantee - 1e-9))
            {
                c.expect(false, "ratio@" + num(db) + " dB = " + num(ratio));
                break;
            }
        }
        return c;
    }

    // 7. bound dominance over random geometries plus threshold continuity
    Check criterion_7()
    {
        Check c;
        std::mt19937 rng(31337);
        std::uniform_int_distribution<int> counts(1, 10);
        std::uniform_real_distribution<double> scale(0.15, 2.5);
        std::uniform_real_distribution<double> angle(-1.3, 1.3);
        std::uniform_real_distribution<double> azim(0.0, 3.14159);
        for (int trial = 0; trial < 50; ++trial)
        {
            ArrayLinkGeometry g;
            g.wavelength = 0.005;
            g.range = 10.0;
            g.n_tx = counts(rng);
            g.n_rx = counts(rng);
            const double d0 =
                rayleigh_spacing(g.wavelength, g.range, std::max(g.n_tx, g.n_rx));
            g.spacing_tx = d0 * scale(rng);
            g.spacing_rx = d0 * scale(rng);
            g.elev_tx = angle(rng);
            g.elev_rx = angle(rng);
            g.azim_rel = azim(rng);
            const auto h = exact_channel(g);
            const BoundCurve curve(g.n_tx, g.n_rx);
            for (int k = 0; k < 20; ++k)
            {
                const double snr = db_to_linear(-30.0 + k * (50.0 / 19.0));
                const double cap = channel_capacity(h, snr).capacity_bits;
                const double bound = upper_bound(snr, curve);
                if (!(bound >= cap - 1e-8))
                {
                    c.expect(false, "dominance broken: cap " + num(cap) +
                                        " > bound " + num(bound));
                    break;
                }
            }
        }

        for (int n_side : {10, 256})
        {
            const BoundCurve curve(n_side, n_side);
            const double prod = static_cast<double>(n_side) * n_side;
            const auto &zetas = curve.thresholds();
            for (std::size_t i = 0; i < zetas.size(); ++i)
            {
                const double n = static_cast<double>(i) + 1.0;
                const double left = n * std::log2(1.0 + prod * zetas[i] / (n * n));
                const double right =
                    (n + 1.0) * std::log2(1.0 + prod * zetas[i] / ((n + 1.0) * (n + 1.0)));
                if (std::abs(left - right) > 1e-8 * left)
                {
                    c.expect(false, "discontinuity at zeta_" + std::to_string(i + 1) +
                                        " (N=" + std::to_string(n_side) + ")");
                    break;
                }
            }
        }
        return c;
    }

    // 8. discrete allocation equals the continuous simplex optimum
    Check criterion_8()
    {
        Check c;
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
        for (int n = 1; n <= 3; ++n)
            for (double x : {0.5, std::sqrt(8.0), 10.0})
            {
                const double oracle = discrete_allocation_oracle(x, n).value;
                const double grid = simplex_grid(x, n, 700);
                c.expect(grid <= oracle + 1e-9,
                         "grid beats oracle at n=" + std::to_string(n) + " X=" + num(x));
                c.expect(oracle - grid <= 6.0 * x / 700.0 + 1e-6,
                         "oracle unreachable at n=" + std::to_string(n) + " X=" + num(x));
            }
        return c;
    }

    // 9. averaging lemma: exact sum, contraction factor 1 - 1/(2N)
    Check criterion_9()
    {
        Check c;
        std::mt19937 rng(555);
        std::uniform_int_distribution<int> quant(-2048, 2048);
        std::uniform_int_distribution<int> len(2, 16);
        for (int trial = 0; trial < 100; ++trial)
        {
            const int n = len(rng);
            // dyadic entries with an exactly zero sum keep every averaging
            // step representable, so sum preservation can be checked with ==
            std::vector<double> x(n);
            double partial = 0.0;
            for (int i = 0; i + 1 < n; ++i)
            {
                x[i] = quant(rng) / 1024.0;
                partial += x[i];
            }
            x[n - 1] = -partial;
            double sum0 = 0.0;
            for (double v : x)
                sum0 += v;

            const auto traj = averaging_process(x, 25);
            c.expect(traj.sum == sum0, "sum drifted on trial " + std::to_string(trial));
            const double factor = 1.0 - 1.0 / (2.0 * n);
            for (std::size_t t = 1; t < traj.sum_sq.size(); ++t)
                if (!(traj.sum_sq[t] <= factor * traj.sum_sq[t - 1] + 1e-12))
                {
                    c.expect(false, "contraction broken on trial " + std::to_string(trial));
                    break;
                }
            if (!c.ok)
                break;
        }
        return c;
    }

    // 10. eigenvalue polarization at N = 512
    Check criterion_10()
    {
        Check c;
        for (double eta : {0.25, 0.5, 0.75})
        {
            const auto res = experiments::run_polarization(512, eta, 0.15);
            c.expect(std::abs(res.frac_near_one - eta) <= 0.08,
                     "eta=" + num(eta) + " frac_one = " + num(res.frac_near_one));
            c.expect(std::abs(res.frac_near_zero - (1.0 - eta)) <= 0.08,
                     "eta=" + num(eta) + " frac_zero = " + num(res.frac_near_zero));
        }
        return c;
    }

    // 11. fast receive path and surrogate scaling
    Check criterion_11()
    {
        Check c;
        std::mt19937 rng(808);
        std::uniform_int_distribution<int> size(2, 128);
        std::uniform_real_distribution<double> theta(0.0, 1.5);
        std::uniform_real_distribution<double> comp(-1.0, 1.0);
        for (int trial = 0; trial < 100; ++trial)
        {
            const int n = size(rng);
            const auto g = ArrayLinkGeometry::rayleigh(0.005, 10.0, n, n, theta(rng));
            const auto tm = build_transceiver(g, ChannelModel::approx);
            std::vector<cdouble> y(n);
            for (auto &v : y)
                v = {comp(rng), comp(rng)};
            const auto fast = fast_receive(tm, y);
            const auto dense = dense_receive(tm, y);
            double scale = 1e-12, err = 0.0;
            for (std::size_t i = 0; i < fast.size(); ++i)
            {
                scale = std::max(scale, std::abs(dense[i]));
                err = std::max(err, std::abs(fast[i] - dense[i]));
            }
            if (!(err <= 1e-8 * scale))
            {
                c.expect(false, "fast/dense mismatch " + num(err / scale) +
                                    " at n=" + std::to_string(n));
                break;
            }
        }

        double prev = 1e300;
        for (int n : {64, 128, 256, 512})
        {
            const auto e = circulant_surrogate_error(0.5, n, n);
            const double rel = e.err_sq / e.norm_sq;
            c.expect(rel < prev, "surrogate error not decreasing at N=" +
                                     std::to_string(n) + " (" + num(rel) + ")");
            prev = rel;
        }
        return c;
    }

    // 12. asymptotic trend: the tuned-eta share improves from N=64 to N=512
    Check criterion_12()
    {
        Check c;
        const double snr = db_to_linear(-5.0);
        const auto share_at = [&](int n)
        {
            const double eta = continuous_eta(snr, n, n);
            const BoundCurve curve(n, n);
            return vandermonde_capacity(eta, n, snr) / upper_bound(snr, curve);
        };
        const double r64 = share_at(64);
        const double r512 = share_at(512);
        c.expect(r512 > r64, "share(512) = " + num(r512) + " vs share(64) = " + num(r64));
        return c;
    }

    const char *criterion_names[] = {
        "zeta_1 closed form",
        "constant c (Lambert route + stationarity)",
        "table rows at N=256",
        "table rows at N=32",
        "three-spacing vs eta-sweep at -5 dB",
        "radial plan r=0.48, snr_min=-10 dB",
        "bound dominance and continuity",
        "discrete allocation vs simplex search",
        "averaging lemma",
        "eigenvalue polarization at N=512",
        "fast receive and surrogate scaling",
        "asymptotic share trend in N",
    };

    using CriterionFn = Check (*)();
    const CriterionFn criteria[] = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
        criterion_11, criterion_12,
    };
} // namespace

int main(int argc, char **argv)
{
    std::vector<int> to_run;
    if (argc > 1)
    {
        for (int i = 1; i < argc; ++i)
            to_run.push_back(std::atoi(argv[i]));
    }
    else
    {
        for (int i = 1; i <= 12; ++i)
            to_run.push_back(i);
    }

    int failures = 0;
    for (int idx : to_run)
    {
        if (idx < 1 || idx > 12)
        {
            std::fprintf(stderr, "unknown criterion %d\n", idx);
            return 64;
        }
        const Check result = criteria[idx - 1]();
        if (result.ok)
        {
            std::printf("[PASS] criterion %2d: %s\n", idx, criterion_names[idx - 1]);
        }
        else
        {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s (%s)\n", idx,
                        criterion_names[idx - 1], result.detail.c_str());
        }
        std::fflush(stdout);
    }
    return failures;
}
