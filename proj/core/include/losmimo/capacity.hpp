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

#ifndef LOSMIMO_CAPACITY_HPP
#define LOSMIMO_CAPACITY_HPP

#include <vector>

#include "losmimo/numkit/complex_mat.hpp"

namespace losmimo
{
    // Water-filling allocation over a set of parallel channel gains.
    //
    // sigma_sq holds the squared singular values sorted descending, powers
    // the matching allocation with sum(powers) = snr, water_level the common
    // level 1/gamma, and capacity_bits = sum log2(1 + p_n sigma_sq_n).
    struct WaterfillResult
    {
        std::vector<double> sigma_sq;
        std::vector<double> powers;
        double water_level = 0.0;
        double capacity_bits = 0.0;
    };

    // Exact water-filling: gains are sorted descending and the water level
    // is solved in closed form per candidate active set, so the result is
    // globally optimal (no iteration). Throws when all gains are zero or
    // snr <= 0.
    WaterfillResult waterfill(std::vector<double> sigma_sq, double snr);

    // Water-filling over the squared singular values of h.
    WaterfillResult channel_capacity(const numkit::ComplexMat &h, double snr);

    // Asymptotic equal-gain model rate
    //   eta n_min log2(1 + n_max snr / (eta^2 n_min)),
    // the rate of eta*n_min equal streams with per-mode gain n_max/eta.
    // Non-integer stream counts are permitted.
    double equal_gain_rate(double eta, int n_min, int n_max, double snr);

} // namespace losmimo

#endif
