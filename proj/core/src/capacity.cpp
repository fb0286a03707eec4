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

#include "losmimo/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "losmimo/numkit/eig.hpp"

namespace losmimo
{

    WaterfillResult waterfill(std::vector<double> sigma_sq, double snr)
    {
        if (!(snr > 0.0))
            throw std::invalid_argument("waterfill: snr must be positive");
        if (sigma_sq.empty())
            throw std::invalid_argument("waterfill: no modes");
        for (double g : sigma_sq)
            if (g < 0.0 || !std::isfinite(g))
                throw std::invalid_argument("waterfill: gains must be finite and >= 0");

        std::sort(sigma_sq.begin(), sigma_sq.end(), std::greater<>());
        if (sigma_sq[0] <= 0.0)
            throw std::invalid_argument("waterfill: all gains are zero");

        // Largest k whose closed-form level mu_k = (snr + sum 1/g_i) / k
        // keeps the weakest active mode above water.
        std::size_t active = 1;
        double level = snr + 1.0 / sigma_sq[0];
        double inv_sum = 1.0 / sigma_sq[0];
        for (std::size_t k = 2; k <= sigma_sq.size(); ++k)
        {
            const double g = sigma_sq[k - 1];
            if (g <= 0.0)
                break;
            const double candidate = (snr + inv_sum + 1.0 / g) / static_cast<double>(k);
            if (candidate > 1.0 / g)
            {
                inv_sum += 1.0 / g;
                level = candidate;
                active = k;
            }
            else
            {
                break;
            }
        }

        WaterfillResult res;
        res.sigma_sq = std::move(sigma_sq);
        res.powers.assign(res.sigma_sq.size(), 0.0);
        res.water_level = level;
        for (std::size_t i = 0; i < active; ++i)
            res.powers[i] = std::max(level - 1.0 / res.sigma_sq[i], 0.0);

        double cap = 0.0;
        for (std::size_t i = 0; i < active; ++i)
            cap += std::log2(1.0 + res.powers[i] * res.sigma_sq[i]);
        res.capacity_bits = cap;
        return res;
    }

    WaterfillResult channel_capacity(const numkit::ComplexMat &h, double snr)
    {
        if (h.empty())
            throw std::invalid_argument("channel_capacity: empty channel");
        return waterfill(numkit::squared_singular_values(h), snr);
    }

    double equal_gain_rate(double eta, int n_min, int n_max, double snr)
    {
        if (!(eta > 0.0) || eta > 1.0 + 1e-12)
            throw std::invalid_argument("equal_gain_rate: eta must be in (0, 1]");
        if (n_min < 1 || n_max < n_min)
            throw std::invalid_argument("equal_gain_rate: bad antenna counts");
        if (!(snr > 0.0))
            throw std::invalid_argument("equal_gain_rate: snr must be positive");
        const double streams = eta * n_min;
        return streams * std::log2(1.0 + n_max * snr / (eta * eta * n_min));
    }

} // namespace losmimo
