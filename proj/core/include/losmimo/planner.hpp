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

#ifndef LOSMIMO_PLANNER_HPP
#define LOSMIMO_PLANNER_HPP

#include <optional>
#include <vector>

namespace losmimo
{
    // Real-valued SNR-optimal configuration parameter,
    // clamp(sqrt(n_max snr / (n_min c)), 1/n_min, 1).
    double continuous_eta(double snr, int n_tx, int n_rx);

    enum class RotationMode
    {
        continuous, // eta from continuous_eta
        integer     // eta = rho(snr) / n_min
    };

    // Receive-array rotation theta_r = arccos(eta_target / cos(theta_t))
    // realizing the target eta on Rayleigh-spaced ULAs. Throws when the
    // transmit tilt makes the target infeasible (arccos argument > 1).
    double rotation_angle(double snr, int n_tx, int n_rx, double theta_t = 0.0,
                          RotationMode mode = RotationMode::continuous);

    // Full radial bank: angles arccos(n / n_min), n = 1..n_min, i.e.
    // decreasing from arccos(1/n_min) to 0.
    std::vector<double> radial_full_bank(int n_min);

    // Antennas needed by a radial bank sharing its central element:
    // n_min (n_r - 1) + 1.
    long radial_antenna_count(int n_min, int n_r);

    // Geometric-ratio bank of radial ULAs with SNR switching rules.
    //
    // etas = {1, r, ..., r^(k-1)}, angles their arccos. snr_thresholds[i]
    // (i = 0..k-2, strictly decreasing) is the switching point
    // (n_min/n_max) c r^(2i+1) between configuration i and i+1; boundary
    // SNRs belong to the lower-eta side. snr_floor is the lower edge of the
    // proven coverage, (n_min/n_max) c r^(2k-1): below it the smallest-eta
    // ULA is still selected but the guarantee no longer applies.
    struct RadialPlan
    {
        double ratio = 0.0;
        int count = 0;
        int n_tx = 0;
        int n_rx = 0;
        std::vector<double> etas;
        std::vector<double> angles;         // radians
        std::vector<double> snr_thresholds; // linear, descending, size count-1
        std::optional<double> snr_min;      // requested truncation point
        double snr_floor = 0.0;
        double guarantee = 0.0;

        bool covers(double snr) const { return snr > snr_floor; }
    };

    // Selection: the full span k = 1 + floor(log n_min / log 1/r) without
    // snr_min, the truncated count otherwise.
    RadialPlan geometric_plan(double r, int n_tx, int n_rx,
                              std::optional<double> snr_min = std::nullopt);

    struct ConfigChoice
    {
        int index = 0;
        double eta = 1.0;
    };

    // Picks the plan branch whose SNR interval contains snr; below the
    // lowest interval the smallest-eta configuration is returned.
    ConfigChoice select_configuration(const RadialPlan &plan, double snr);

    // Worst-case share of the capacity bound achieved by a geometric bank,
    // log(1 + c r) / (sqrt(r) log(1 + c)); equals 1 at r = 1.
    double guarantee_ratio(double r);

} // namespace losmimo

#endif
