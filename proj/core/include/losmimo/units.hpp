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

#ifndef LOSMIMO_UNITS_HPP
#define LOSMIMO_UNITS_HPP

#include <cmath>
#include <numbers>

namespace losmimo
{
    // All dB <-> linear conversions go through these two helpers.
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

    inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }
    inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

} // namespace losmimo

#endif
