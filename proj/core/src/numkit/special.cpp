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

#include "losmimo/numkit/special.hpp"

#include <cmath>
#include <stdexcept>

namespace losmimo::numkit
{

    double lambert_w0(double x)
    {
        const double min_x = -std::exp(-1.0);
        if (std::isnan(x) || x < min_x * (1.0 + 1e-14) - 1e-300)
            throw std::domain_error("lambert_w0: argument below -1/e");
        if (x == 0.0)
            return 0.0;
        if (x <= min_x)
            return -1.0;

        // Starting guess: series near the branch point, log asymptote for
        // large arguments, w ~ x elsewhere.
        double w;
        if (x < -0.25)
        {
            const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
            w = -1.0 + p - p * p / 3.0;
        }
        else if (x < 2.0)
        {
            w = x / (1.0 + x); // exact at 0, decent through x ~ e
        }
        else
        {
            const double l1 = std::log(x);
            const double l2 = std::log(l1);
            w = l1 - l2 + l2 / l1;
        }

        for (int it = 0; it < 64; ++it)
        {
            const double ew = std::exp(w);
            const double f = w * ew - x;
            const double denom = ew * (w + 1.0) - f * (w + 2.0) / (2.0 * w + 2.0);
            const double step = f / denom;
            w -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w)))
                break;
        }
        return w;
    }

    double bisect_root(const std::function<double(double)> &f,
                       double bracket_hint,
                       double rel_tol)
    {
        if (!(bracket_hint > 0.0))
            throw std::invalid_argument("bisect_root: hint must be positive");

        double lo = bracket_hint * 0.5;
        double hi = bracket_hint * 2.0;
        double flo = f(lo);
        double fhi = f(hi);
        int expansions = 0;
        while (flo * fhi > 0.0)
        {
            if (++expansions > 200)
                throw std::runtime_error("bisect_root: no sign change found");
            lo *= 0.5;
            hi *= 2.0;
            flo = f(lo);
            fhi = f(hi);
        }
        if (flo == 0.0)
            return lo;
        if (fhi == 0.0)
            return hi;

        for (int it = 0; it < 2000 && (hi - lo) > rel_tol * lo; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0)
                return mid;
            if (flo * fm < 0.0)
            {
                hi = mid;
            }
            else
            {
                lo = mid;
                flo = fm;
            }
        }
        return 0.5 * (lo + hi);
    }

} // namespace losmimo::numkit
