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

#ifndef LOSMIMO_BOUND_HPP
#define LOSMIMO_BOUND_HPP

#include <memory>
#include <vector>

namespace losmimo
{
    // f(x) = log2(1 + x) / sqrt(x): per-mode rate against root effective
    // SNR. Unimodal on x > 0 with its maximum at optimal_mode_snr().
    double rate_per_root_snr(double x);

    // The constant c ~ 3.92155: the effective per-mode SNR maximizing
    // rate_per_root_snr, computed from the principal Lambert W branch as
    // c = -1 - 2 / W0(-2 e^-2) and satisfying ln(1+c) = 2c/(1+c).
    double optimal_mode_snr();

    // SNR threshold where an n-mode and an (n+1)-mode equal-gain channel
    // with total squared gain n_rx*n_tx yield the same rate; thresholds are
    // strictly increasing in n. Requires 1 <= n <= n_min - 1.
    double zeta_threshold(int n, int n_tx, int n_rx);

    // Capacity upper bound over all antenna arrangements for an
    // (n_rx x n_tx) link. Thresholds are computed lazily on first use and
    // memoized; queries are safe from concurrent threads.
    class BoundCurve
    {
      public:
        BoundCurve(int n_tx, int n_rx);

        int n_tx() const { return n_tx_; }
        int n_rx() const { return n_rx_; }
        int n_min() const { return n_tx_ < n_rx_ ? n_tx_ : n_rx_; }
        double constant_c() const { return c_; }

        // All n_min - 1 thresholds, ascending (empty for n_min = 1).
        const std::vector<double> &thresholds() const;

      private:
        int n_tx_;
        int n_rx_;
        double c_;
        struct Memo;
        std::shared_ptr<Memo> memo_;
    };

    // Number of equal-gain modes in the bound-achieving arrangement:
    // 1 below zeta_1, stepping up to n_min at zeta_{n_min-1}.
    int rho_of_snr(double snr, const BoundCurve &curve);

    // rho log2(1 + n_rx n_tx snr / rho^2) with rho = rho_of_snr.
    double upper_bound(double snr, const BoundCurve &curve);

    // Real-valued relaxation of rho: 1, then sqrt(n_min n_max snr / c),
    // then n_min.
    double rho_tilde(double snr, int n_tx, int n_rx);

    // Slightly looser bound in explicit form,
    // rho_tilde log2(1 + n_rx n_tx snr / rho_tilde^2); its middle branch
    // equals sqrt(n_tx n_rx snr / c) log2(1 + c).
    double upper_bound_relaxed(double snr, int n_tx, int n_rx);

    // Exhaustive maximization of rho log2(1 + X^2 / rho^2) over integer
    // rho in {1..n_modes}; equals the bound at snr = X^2 / (n_rx n_tx).
    struct DiscreteAllocation
    {
        int rho = 0;
        double value = 0.0;
    };

    DiscreteAllocation discrete_allocation_oracle(double x_total, int n_modes);

    // Repeatedly replaces the maximum and minimum entries by their mean.
    // Keeps the vector sum and contracts the sum of squares; returned
    // trajectory holds the sum of squares before each iteration and after
    // the last (length iterations + 1).
    struct AveragingTrajectory
    {
        std::vector<double> state;  // vector after the final iteration
        std::vector<double> sum_sq; // sum-of-squares trajectory
        double sum = 0.0;           // invariant vector sum (final state)
    };

    AveragingTrajectory averaging_process(std::vector<double> x, int iterations);

} // namespace losmimo

#endif
