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

#include "losmimo/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "losmimo/bound.hpp"

namespace losmimo
{

    double continuous_eta(double snr, int n_tx, int n_rx)
    {
        if (!(snr > 0.0))
            throw std::invalid_argument("continuous_eta: snr must be positive");
        if (n_tx < 1 || n_rx < 1)
            throw std::invalid_argument("continuous_eta: antenna counts must be >= 1");
        const double n_min = std::min(n_tx, n_rx);
        const double n_max = std::max(n_tx, n_rx);
        const double eta = std::sqrt(n_max * snr / (n_min * optimal_mode_snr()));
        return std::clamp(eta, 1.0 / n_min, 1.0);
    }

    double rotation_angle(double snr, int n_tx, int n_rx, double theta_t,
                          RotationMode mode)
    {
        const int n_min = std::min(n_tx, n_rx);
        double eta_target;
        if (mode == RotationMode::continuous)
        {
            eta_target = continuous_eta(snr, n_tx, n_rx);
        }
        else
        {
            BoundCurve curve(n_tx, n_rx);
            eta_target = static_cast<double>(rho_of_snr(snr, curve)) / n_min;
        }
        const double arg = eta_target / std::cos(theta_t);
        if (arg > 1.0 + 1e-12)
            throw std::invalid_argument(
                "rotation_angle: transmit tilt makes the target eta infeasible");
        return std::acos(std::min(arg, 1.0));
    }

    std::vector<double> radial_full_bank(int n_min)
    {
        if (n_min < 1)
            throw std::invalid_argument("radial_full_bank: n_min must be >= 1");
        std::vector<double> angles(n_min);
        for (int n = 1; n <= n_min; ++n)
            angles[n - 1] = std::acos(static_cast<double>(n) / n_min);
        return angles;
    }

    long radial_antenna_count(int n_min, int n_r)
    {
        if (n_min < 1 || n_r < 1)
            throw std::invalid_argument("radial_antenna_count: counts must be >= 1");
        return static_cast<long>(n_min) * (n_r - 1) + 1;
    }

    RadialPlan geometric_plan(double r, int n_tx, int n_rx,
                              std::optional<double> snr_min)
    {
        if (!(r > 0.0) || !(r < 1.0))
            throw std::invalid_argument("geometric_plan: ratio must be in (0, 1)");
        if (n_tx < 1 || n_rx < 1)
            throw std::invalid_argument("geometric_plan: antenna counts must be >= 1");
        if (snr_min && !(*snr_min > 0.0))
            throw std::invalid_argument("geometric_plan: snr_min must be positive");

        const double n_min = std::min(n_tx, n_rx);
        const double n_max = std::max(n_tx, n_rx);
        const double c = optimal_mode_snr();
        const double ratio_scale = n_min / n_max * c;

        int k;
        if (snr_min)
        {
            k = static_cast<int>(std::floor(
                std::log(ratio_scale / *snr_min) / (2.0 * std::log(1.0 / r)) + 1.5));
        }
        else
        {
            k = 1 + static_cast<int>(std::floor(std::log(n_min) / std::log(1.0 / r)));
        }
        k = std::max(k, 1);

        RadialPlan plan;
        plan.ratio = r;
        plan.count = k;
        plan.n_tx = n_tx;
        plan.n_rx = n_rx;
        plan.snr_min = snr_min;
        plan.guarantee = guarantee_ratio(r);

        plan.etas.resize(k);
        plan.angles.resize(k);
        for (int i = 0; i < k; ++i)
        {
            plan.etas[i] = std::pow(r, i);
            plan.angles[i] = std::acos(plan.etas[i]);
        }
        plan.snr_thresholds.resize(k - 1);
        for (int i = 0; i + 1 < k; ++i)
            plan.snr_thresholds[i] = ratio_scale * std::pow(r, 2 * i + 1);
        plan.snr_floor = ratio_scale * std::pow(r, 2 * k - 1);
        return plan;
    }

    ConfigChoice select_configuration(const RadialPlan &plan, double snr)
    {
        if (!(snr > 0.0))
            throw std::invalid_argument("select_configuration: snr must be positive");
        // thresholds are descending; a boundary hit goes to the lower-eta side
        int index = plan.count - 1;
        for (int i = 0; i + 1 < plan.count; ++i)
        {
            if (snr > plan.snr_thresholds[i])
            {
                index = i;
                break;
            }
        }
        return {index, plan.etas[index]};
    }

    double guarantee_ratio(double r)
    {
        if (!(r > 0.0) || r > 1.0)
            throw std::invalid_argument("guarantee_ratio: ratio must be in (0, 1]");
        const double c = optimal_mode_snr();
        return std::log(1.0 + c * r) / (std::sqrt(r) * std::log(1.0 + c));
    }

} // namespace losmimo
