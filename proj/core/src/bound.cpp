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

#include "losmimo/bound.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "losmimo/numkit/special.hpp"

namespace losmimo
{

    double rate_per_root_snr(double x)
    {
        if (!(x > 0.0))
            throw std::domain_error("rate_per_root_snr: x must be positive");
        return std::log2(1.0 + x) / std::sqrt(x);
    }

    double optimal_mode_snr()
    {
        static const double c = -1.0 - 2.0 / numkit::lambert_w0(-2.0 * std::exp(-2.0));
        return c;
    }

    double zeta_threshold(int n, int n_tx, int n_rx)
    {
        const int n_min = std::min(n_tx, n_rx);
        if (n < 1 || n > n_min - 1)
            throw std::invalid_argument("zeta_threshold: n out of range");
        const double prod = static_cast<double>(n_tx) * n_rx;
        const double a = prod / (static_cast<double>(n) * n);
        const double b = prod / (static_cast<double>(n + 1) * (n + 1));
        const auto gap = [&](double snr)
        { return rate_per_root_snr(a * snr) - rate_per_root_snr(b * snr); };
        const double hint = optimal_mode_snr() * n * (n + 1) / prod;
        return numkit::bisect_root(gap, hint);
    }

    struct BoundCurve::Memo
    {
        std::once_flag once;
        std::vector<double> zetas;
    };

    BoundCurve::BoundCurve(int n_tx, int n_rx)
        : n_tx_(n_tx), n_rx_(n_rx), c_(optimal_mode_snr()),
          memo_(std::make_shared<Memo>())
    {
        if (n_tx < 1 || n_rx < 1)
            throw std::invalid_argument("BoundCurve: antenna counts must be >= 1");
    }

    const std::vector<double> &BoundCurve::thresholds() const
    {
        std::call_once(memo_->once, [this]
                       {
            const int n_min = this->n_min();
            memo_->zetas.resize(n_min > 0 ? n_min - 1 : 0);
            for (int n = 1; n <= n_min - 1; ++n)
                memo_->zetas[n - 1] = zeta_threshold(n, n_tx_, n_rx_); });
        return memo_->zetas;
    }

    int rho_of_snr(double snr, const BoundCurve &curve)
    {
        if (!(snr > 0.0))
            throw std::invalid_argument("rho_of_snr: snr must be positive");
        const std::vector<double> &z = curve.thresholds();
        // first threshold strictly above snr: rho = index + 1
        const auto it = std::upper_bound(z.begin(), z.end(), snr);
        return static_cast<int>(it - z.begin()) + 1;
    }

    double upper_bound(double snr, const BoundCurve &curve)
    {
        const double rho = rho_of_snr(snr, curve);
        const double prod = static_cast<double>(curve.n_tx()) * curve.n_rx();
        return rho * std::log2(1.0 + prod * snr / (rho * rho));
    }

    double rho_tilde(double snr, int n_tx, int n_rx)
    {
        if (!(snr > 0.0))
            throw std::invalid_argument("rho_tilde: snr must be positive");
        const double n_min = std::min(n_tx, n_rx);
        const double n_max = std::max(n_tx, n_rx);
        const double c = optimal_mode_snr();
        if (snr < c / (n_min * n_max))
            return 1.0;
        if (snr < n_min * c / n_max)
            return std::sqrt(n_min * n_max * snr / c);
        return n_min;
    }

    double upper_bound_relaxed(double snr, int n_tx, int n_rx)
    {
        const double rho = rho_tilde(snr, n_tx, n_rx);
        const double prod = static_cast<double>(n_tx) * n_rx;
        return rho * std::log2(1.0 + prod * snr / (rho * rho));
    }

    DiscreteAllocation discrete_allocation_oracle(double x_total, int n_modes)
    {
        if (!(x_total > 0.0))
            throw std::invalid_argument("discrete_allocation_oracle: X must be positive");
        if (n_modes < 1)
            throw std::invalid_argument("discrete_allocation_oracle: n_modes must be >= 1");
        DiscreteAllocation best;
        for (int rho = 1; rho <= n_modes; ++rho)
        {
            const double v = rho * std::log2(1.0 + x_total * x_total /
                                                       (static_cast<double>(rho) * rho));
            if (v > best.value)
            {
                best.value = v;
                best.rho = rho;
            }
        }
        return best;
    }

    AveragingTrajectory averaging_process(std::vector<double> x, int iterations)
    {
        if (x.empty())
            throw std::invalid_argument("averaging_process: empty vector");
        if (iterations < 0)
            throw std::invalid_argument("averaging_process: negative iteration count");
        for (double v : x)
            if (!std::isfinite(v))
                throw std::invalid_argument("averaging_process: entries must be finite");

        const auto sum_sq = [](const std::vector<double> &v)
        {
            double s = 0.0;
            for (double e : v)
                s += e * e;
            return s;
        };

        AveragingTrajectory out;
        out.sum_sq.reserve(iterations + 1);
        out.sum_sq.push_back(sum_sq(x));
        for (int t = 0; t < iterations; ++t)
        {
            auto [mn, mx] = std::minmax_element(x.begin(), x.end());
            const double mean = 0.5 * (*mn + *mx);
            *mn = mean;
            *mx = mean;
            out.sum_sq.push_back(sum_sq(x));
        }
        out.sum = 0.0;
        for (double v : x)
            out.sum += v;
        out.state = std::move(x);
        return out;
    }

} // namespace losmimo
