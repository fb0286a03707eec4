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

#ifndef LOSMIMO_NUMKIT_SPECIAL_HPP
#define LOSMIMO_NUMKIT_SPECIAL_HPP

#include <functional>

namespace losmimo::numkit
{
    // Principal branch of the Lambert W function, w e^w = x, for
    // x >= -1/e. Halley iteration; throws std::domain_error below -1/e.
    double lambert_w0(double x);

    // Root of a continuous scalar function on the positive axis. A sign
    // change is located by geometric expansion of [hint/2, 2 hint] and the
    // bracket is then bisected until its width is below rel_tol * root.
    // Throws std::runtime_error when no sign change appears within 200
    // expansions.
    double bisect_root(const std::function<double(double)> &f,
                       double bracket_hint,
                       double rel_tol = 1e-12);

} // namespace losmimo::numkit

#endif
