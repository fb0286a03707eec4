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

#ifndef LOSMIMO_EXPERIMENTS_HPP
#define LOSMIMO_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "losmimo/planner.hpp"

namespace losmimo::experiments
{
    // Golden comparison table: per SNR the planner configuration and the
    // share of the capacity bound achieved by parallel Rayleigh ULAs, the
    // rotated array with SVD processing, and the rotated array with the
    // Fourier + matched-filter architecture. Shares in percent.
    //
    // mrc_pct follows the published-table convention (nominal subchannel
    // noise, floor(eta n) streams); mrc_exact_pct is the exact-SINR rate
    // with interference accounted, optionally maximized over the stream
    // count when sweep_streams is set.
    struct Table1Row
    {
        double snr_db = 0.0;
        double eta = 0.0;
        double theta_r_deg = 0.0;
        double bound_bits = 0.0;
        double parallel_pct = 0.0;
        double svd_pct = 0.0;
        double mrc_pct = 0.0;
        double mrc_exact_pct = 0.0;
        int mrc_streams = 0;
    };

    std::vector<Table1Row> run_table1(int n, const std::vector<double> &snrs_db,
                                      bool sweep_streams = false);

    // Switching among three fixed spacings: tight (eta -> 0 beamforming),
    // 1/sqrt(N) and Rayleigh. The scheme share is the best of the three
    // exact capacity shares at each SNR (the array best suited to the SNR
    // is the one selected).
    struct ThreeSpacingRow
    {
        double snr_db = 0.0;
        int selected = 0; // 0 tight, 1 medium, 2 Rayleigh
        double scheme_pct = 0.0;
        double tight_pct = 0.0;
        double medium_pct = 0.0;
        double rayleigh_pct = 0.0;
        double bound_bits = 0.0;
    };

    std::vector<ThreeSpacingRow> run_three_spacing(int n,
                                                   const std::vector<double> &snrs_db);

    // Capacity share across an eta grid; one row per (snr, eta) pair plus
    // the per-SNR envelope.
    struct EtaSweepRow
    {
        double snr_db = 0.0;
        double eta = 0.0;
        double capacity_bits = 0.0;
        double bound_bits = 0.0;
        double share_pct = 0.0;
    };

    std::vector<EtaSweepRow> run_eta_sweep(int n, const std::vector<double> &snrs_db,
                                           const std::vector<double> &eta_grid);

    std::vector<double> default_eta_grid(int n, int points);

    // Eigenvalues of (eta / n_max) H^H H together with the polarized mass
    // fractions near 0 and near 1.
    struct PolarizationResult
    {
        double eta = 0.0;
        int n = 0;
        std::vector<double> eigenvalues; // descending
        double frac_near_one = 0.0;      // within (1 - eps, 1 + eps)
        double frac_near_zero = 0.0;     // below eps
        double eps = 0.0;
    };

    PolarizationResult run_polarization(int n, double eta, double eps = 0.15);

    // Relative Frobenius mismatch of the circulant surrogate across sizes.
    struct SurrogateRow
    {
        int n = 0;
        double err_sq = 0.0;
        double norm_sq = 0.0;
        double rel_err = 0.0; // sqrt(err_sq / norm_sq)
    };

    std::vector<SurrogateRow> run_surrogate_scaling(const std::vector<int> &sizes,
                                                    double eta);

    // Bound sweep rows: integer and relaxed bound against SNR.
    struct BoundSweepRow
    {
        double snr_db = 0.0;
        int rho = 0;
        double bound_bits = 0.0;
        double rho_tilde = 0.0;
        double relaxed_bits = 0.0;
    };

    std::vector<BoundSweepRow> run_bound_sweep(int n_tx, int n_rx,
                                               const std::vector<double> &snrs_db);

    // Deterministic CSV encodings (12 significant digits, unit-bearing
    // headers).
    std::string to_csv(const std::vector<Table1Row> &rows);
    std::string to_csv(const std::vector<ThreeSpacingRow> &rows);
    std::string to_csv(const std::vector<EtaSweepRow> &rows);
    std::string to_csv(const PolarizationResult &result, int histogram_bins = 24);
    std::string to_csv(const std::vector<SurrogateRow> &rows);
    std::string to_csv(const std::vector<BoundSweepRow> &rows);

    // Plan rendering for the CLI: JSON record and a readable table.
    std::string plan_to_json(const RadialPlan &plan);
    std::string plan_to_text(const RadialPlan &plan);

    // dB grid helper: start/stop inclusive with the given step.
    std::vector<double> snr_grid_db(double start_db, double stop_db, double step_db);

    // Worker count for grid evaluation, from env LOSMIMO_THREADS (default 1).
    int thread_count_from_env();

} // namespace losmimo::experiments

#endif
