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

#include "losmimo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "losmimo/bound.hpp"
#include "losmimo/capacity.hpp"
#include "losmimo/channel.hpp"
#include "losmimo/numkit/eig.hpp"
#include "losmimo/transceiver.hpp"
#include "losmimo/units.hpp"

namespace losmimo::experiments
{
    namespace
    {
        std::string fmt12(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.12g", v);
            return buf;
        }

        double capacity_of_eta(double eta, int n, double snr)
        {
            const UlaChannelSpec spec{eta, n, n};
            const auto gains = numkit::hermitian_eigenvalues(vandermonde_gram(spec));
            std::vector<double> clipped(gains.size());
            for (std::size_t i = 0; i < gains.size(); ++i)
                clipped[i] = std::max(gains[i], 0.0);
            return waterfill(clipped, snr).capacity_bits;
        }

        // Rank-1 capacity of the tightly spaced (eta -> 0) configuration:
        // every entry of H collapses to the same phasor.
        double tight_capacity(int n, double snr)
        {
            return std::log2(1.0 + static_cast<double>(n) * n * snr);
        }

        void parallel_for(int jobs, const std::function<void(int)> &body)
        {
            const int workers = std::min(thread_count_from_env(), jobs);
            if (workers <= 1)
            {
                for (int i = 0; i < jobs; ++i)
                    body(i);
                return;
            }
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w]
                                  {
                    for (int i = w; i < jobs; i += workers)
                        body(i); });
            for (std::thread &t : pool)
                t.join();
        }
    } // namespace

    int thread_count_from_env()
    {
        const char *env = std::getenv("LOSMIMO_THREADS");
        if (!env)
            return 1;
        const int n = std::atoi(env);
        return n > 0 ? n : 1;
    }

    std::vector<double> snr_grid_db(double start_db, double stop_db, double step_db)
    {
        if (!(step_db > 0.0) || stop_db < start_db)
            throw std::invalid_argument("snr grid: need step > 0 and stop >= start");
        std::vector<double> grid;
        for (int i = 0;; ++i)
        {
            const double v = start_db + i * step_db;
            if (v > stop_db + 1e-9)
                break;
            grid.push_back(v);
        }
        return grid;
    }

    std::vector<Table1Row> run_table1(int n, const std::vector<double> &snrs_db,
                                      bool sweep_streams)
    {
        if (n < 2)
            throw std::invalid_argument("run_table1: n must be >= 2");
        const BoundCurve curve(n, n);
        const double lambda = 0.005, range = 10.0;

        std::vector<Table1Row> rows(snrs_db.size());
        parallel_for(static_cast<int>(snrs_db.size()), [&](int i)
                     {
            const double snr = db_to_linear(snrs_db[i]);
            Table1Row row;
            row.snr_db = snrs_db[i];
            row.eta = continuous_eta(snr, n, n);
            row.theta_r_deg = rad_to_deg(std::acos(row.eta));
            row.bound_bits = upper_bound(snr, curve);

            row.parallel_pct = 100.0 * capacity_of_eta(1.0, n, snr) / row.bound_bits;
            row.svd_pct = 100.0 * capacity_of_eta(row.eta, n, snr) / row.bound_bits;

            const auto geom = ArrayLinkGeometry::rayleigh(lambda, range, n, n,
                                                          std::acos(row.eta));
            const auto tm = build_transceiver(geom, ChannelModel::approx);
            const MrcResult mrc = mrc_nominal_rate(tm, snr);
            row.mrc_pct = 100.0 * mrc.rate_bits / row.bound_bits;
            row.mrc_streams = mrc.n_streams;
            const MrcResult exact = sweep_streams ? mrc_best_streams(tm, snr)
                                                  : mrc_spectral_efficiency(tm, snr);
            row.mrc_exact_pct = 100.0 * exact.rate_bits / row.bound_bits;
            rows[i] = row; });
        return rows;
    }

    std::vector<ThreeSpacingRow> run_three_spacing(int n,
                                                   const std::vector<double> &snrs_db)
    {
        if (n < 2)
            throw std::invalid_argument("run_three_spacing: n must be >= 2");
        const BoundCurve curve(n, n);
        const double eta_medium = 1.0 / std::sqrt(static_cast<double>(n));

        std::vector<ThreeSpacingRow> rows(snrs_db.size());
        parallel_for(static_cast<int>(snrs_db.size()), [&](int i)
                     {
            const double snr = db_to_linear(snrs_db[i]);
            ThreeSpacingRow row;
            row.snr_db = snrs_db[i];
            row.bound_bits = upper_bound(snr, curve);

            row.tight_pct = 100.0 * tight_capacity(n, snr) / row.bound_bits;
            row.medium_pct = 100.0 * capacity_of_eta(eta_medium, n, snr) / row.bound_bits;
            row.rayleigh_pct = 100.0 * capacity_of_eta(1.0, n, snr) / row.bound_bits;
            row.selected = 0;
            row.scheme_pct = row.tight_pct;
            if (row.medium_pct > row.scheme_pct)
            {
                row.selected = 1;
                row.scheme_pct = row.medium_pct;
            }
            if (row.rayleigh_pct > row.scheme_pct)
            {
                row.selected = 2;
                row.scheme_pct = row.rayleigh_pct;
            }
            rows[i] = row; });
        return rows;
    }

    std::vector<double> default_eta_grid(int n, int points)
    {
        if (points < 2 || n < 2)
            throw std::invalid_argument("default_eta_grid: need n >= 2, points >= 2");
        std::vector<double> grid(points);
        const double lo = std::log(1.0 / n);
        for (int i = 0; i < points; ++i)
            grid[i] = std::exp(lo * (1.0 - static_cast<double>(i) / (points - 1)));
        grid.back() = 1.0;
        return grid;
    }

    std::vector<EtaSweepRow> run_eta_sweep(int n, const std::vector<double> &snrs_db,
                                           const std::vector<double> &eta_grid)
    {
        if (n < 2 || eta_grid.empty())
            throw std::invalid_argument("run_eta_sweep: bad arguments");
        const BoundCurve curve(n, n);

        std::vector<EtaSweepRow> rows(snrs_db.size() * eta_grid.size());
        parallel_for(static_cast<int>(rows.size()), [&](int idx)
                     {
            const std::size_t si = idx / eta_grid.size();
            const std::size_t ei = idx % eta_grid.size();
            const double snr = db_to_linear(snrs_db[si]);
            EtaSweepRow row;
            row.snr_db = snrs_db[si];
            row.eta = eta_grid[ei];
            row.bound_bits = upper_bound(snr, curve);
            row.capacity_bits = capacity_of_eta(row.eta, n, snr);
            row.share_pct = 100.0 * row.capacity_bits / row.bound_bits;
            rows[idx] = row; });
        return rows;
    }

    PolarizationResult run_polarization(int n, double eta, double eps)
    {
        if (n < 2 || !(eta > 0.0) || eta > 1.0 || !(eps > 0.0))
            throw std::invalid_argument("run_polarization: bad arguments");
        const UlaChannelSpec spec{eta, n, n};
        PolarizationResult res;
        res.eta = eta;
        res.n = n;
        res.eps = eps;
        res.eigenvalues = numkit::hermitian_eigenvalues(vandermonde_gram(spec));
        const double scale = eta / n;
        for (double &v : res.eigenvalues)
            v *= scale;
        int near_one = 0, near_zero = 0;
        for (double v : res.eigenvalues)
        {
            if (v > 1.0 - eps && v < 1.0 + eps)
                ++near_one;
            if (v < eps)
                ++near_zero;
        }
        res.frac_near_one = static_cast<double>(near_one) / n;
        res.frac_near_zero = static_cast<double>(near_zero) / n;
        return res;
    }

    std::vector<SurrogateRow> run_surrogate_scaling(const std::vector<int> &sizes,
                                                    double eta)
    {
        std::vector<SurrogateRow> rows;
        rows.reserve(sizes.size());
        for (int n : sizes)
        {
            const SurrogateError e = circulant_surrogate_error(eta, n, n);
            rows.push_back({n, e.err_sq, e.norm_sq, std::sqrt(e.err_sq / e.norm_sq)});
        }
        return rows;
    }

    std::vector<BoundSweepRow> run_bound_sweep(int n_tx, int n_rx,
                                               const std::vector<double> &snrs_db)
    {
        const BoundCurve curve(n_tx, n_rx);
        std::vector<BoundSweepRow> rows;
        rows.reserve(snrs_db.size());
        for (double db : snrs_db)
        {
            const double snr = db_to_linear(db);
            rows.push_back({db, rho_of_snr(snr, curve), upper_bound(snr, curve),
                            rho_tilde(snr, n_tx, n_rx),
                            upper_bound_relaxed(snr, n_tx, n_rx)});
        }
        return rows;
    }

    std::string to_csv(const std::vector<Table1Row> &rows)
    {
        std::ostringstream os;
        os << "snr_db,eta,theta_r_deg,bound_bits_per_s_per_hz,parallel_pct,"
              "svd_pct,fourier_mrc_pct,fourier_mrc_exact_sinr_pct,mrc_streams\n";
        for (const auto &r : rows)
            os << fmt12(r.snr_db) << ',' << fmt12(r.eta) << ',' << fmt12(r.theta_r_deg)
               << ',' << fmt12(r.bound_bits) << ',' << fmt12(r.parallel_pct) << ','
               << fmt12(r.svd_pct) << ',' << fmt12(r.mrc_pct) << ','
               << fmt12(r.mrc_exact_pct) << ',' << r.mrc_streams << '\n';
        return os.str();
    }

    std::string to_csv(const std::vector<ThreeSpacingRow> &rows)
    {
        std::ostringstream os;
        os << "snr_db,selected_config,scheme_pct,tight_pct,medium_pct,rayleigh_pct,"
              "bound_bits_per_s_per_hz\n";
        for (const auto &r : rows)
            os << fmt12(r.snr_db) << ',' << r.selected << ',' << fmt12(r.scheme_pct)
               << ',' << fmt12(r.tight_pct) << ',' << fmt12(r.medium_pct) << ','
               << fmt12(r.rayleigh_pct) << ',' << fmt12(r.bound_bits) << '\n';
        return os.str();
    }

    std::string to_csv(const std::vector<EtaSweepRow> &rows)
    {
        std::ostringstream os;
        os << "snr_db,eta,capacity_bits_per_s_per_hz,bound_bits_per_s_per_hz,share_pct\n";
        for (const auto &r : rows)
            os << fmt12(r.snr_db) << ',' << fmt12(r.eta) << ',' << fmt12(r.capacity_bits)
               << ',' << fmt12(r.bound_bits) << ',' << fmt12(r.share_pct) << '\n';
        return os.str();
    }

    std::string to_csv(const PolarizationResult &result, int histogram_bins)
    {
        std::ostringstream os;
        os << "bin_center_eigenvalue,count\n";
        const double lo = 0.0;
        const double hi = std::max(1.25, result.eigenvalues.empty()
                                             ? 1.25
                                             : result.eigenvalues.front() * 1.01);
        const double width = (hi - lo) / histogram_bins;
        std::vector<int> counts(histogram_bins, 0);
        for (double v : result.eigenvalues)
        {
            int b = static_cast<int>((v - lo) / width);
            b = std::clamp(b, 0, histogram_bins - 1);
            ++counts[b];
        }
        for (int b = 0; b < histogram_bins; ++b)
            os << fmt12(lo + (b + 0.5) * width) << ',' << counts[b] << '\n';
        return os.str();
    }

    std::string to_csv(const std::vector<SurrogateRow> &rows)
    {
        std::ostringstream os;
        os << "n_antennas,err_frobenius_sq,norm_frobenius_sq,relative_error\n";
        for (const auto &r : rows)
            os << r.n << ',' << fmt12(r.err_sq) << ',' << fmt12(r.norm_sq) << ','
               << fmt12(r.rel_err) << '\n';
        return os.str();
    }

    std::string to_csv(const std::vector<BoundSweepRow> &rows)
    {
        std::ostringstream os;
        os << "snr_db,rho,bound_bits,rho_tilde,relaxed_bits\n";
        for (const auto &r : rows)
            os << fmt12(r.snr_db) << ',' << r.rho << ',' << fmt12(r.bound_bits) << ','
               << fmt12(r.rho_tilde) << ',' << fmt12(r.relaxed_bits) << '\n';
        return os.str();
    }

    std::string plan_to_json(const RadialPlan &plan)
    {
        std::ostringstream os;
        os << "{\n";
        os << "  \"ratio\": " << fmt12(plan.ratio) << ",\n";
        os << "  \"count\": " << plan.count << ",\n";
        os << "  \"n_tx\": " << plan.n_tx << ",\n";
        os << "  \"n_rx\": " << plan.n_rx << ",\n";
        os << "  \"guarantee\": " << fmt12(plan.guarantee) << ",\n";
        if (plan.snr_min)
            os << "  \"snr_min_db\": " << fmt12(linear_to_db(*plan.snr_min)) << ",\n";
        os << "  \"snr_floor_db\": " << fmt12(linear_to_db(plan.snr_floor)) << ",\n";
        const auto list = [&os](const char *name, const std::vector<double> &v,
                                const std::function<double(double)> &map)
        {
            os << "  \"" << name << "\": [";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? ", " : "") << fmt12(map(v[i]));
            os << "]";
        };
        list("etas", plan.etas, [](double v) { return v; });
        os << ",\n";
        list("angles_deg", plan.angles, rad_to_deg);
        os << ",\n";
        list("snr_thresholds_db", plan.snr_thresholds, linear_to_db);
        os << "\n}\n";
        return os.str();
    }

    std::string plan_to_text(const RadialPlan &plan)
    {
        std::ostringstream os;
        char buf[160];
        os << "radial ULA bank: ratio " << fmt12(plan.ratio) << ", " << plan.count
           << " arrays, guarantee " << fmt12(100.0 * plan.guarantee) << "% of bound\n";
        if (plan.snr_min)
            os << "truncated for snr >= " << fmt12(linear_to_db(*plan.snr_min))
               << " dB (guaranteed coverage floor "
               << fmt12(linear_to_db(plan.snr_floor)) << " dB)\n";
        os << "  idx      eta    angle_deg    active for snr (dB)\n";
        for (int i = 0; i < plan.count; ++i)
        {
            std::string range = "all";
            if (plan.count > 1)
            {
                if (i == 0)
                    range = "> " + fmt12(linear_to_db(plan.snr_thresholds[0]));
                else if (i + 1 < plan.count)
                    range = "(" + fmt12(linear_to_db(plan.snr_thresholds[i])) + ", " +
                            fmt12(linear_to_db(plan.snr_thresholds[i - 1])) + "]";
                else
                    range = "<= " + fmt12(linear_to_db(plan.snr_thresholds[i - 1]));
            }
            std::snprintf(buf, sizeof(buf), "  %3d  %8.5f   %9.3f    %s\n", i,
                          plan.etas[i], rad_to_deg(plan.angles[i]), range.c_str());
            os << buf;
        }
        return os.str();
    }

} // namespace losmimo::experiments
