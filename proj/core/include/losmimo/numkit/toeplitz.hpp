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

#ifndef LOSMIMO_NUMKIT_TOEPLITZ_HPP
#define LOSMIMO_NUMKIT_TOEPLITZ_HPP

#include <span>
#include <vector>

#include "losmimo/numkit/complex_mat.hpp"

namespace losmimo::numkit
{
    // y = T x for the Toeplitz matrix T with given first column (length m)
    // and first row (length n), via circulant embedding and one FFT-sized
    // convolution: O((m+n) log(m+n)). first_col[0] must equal first_row[0].
    std::vector<cdouble> toeplitz_apply(std::span<const cdouble> first_col,
                                        std::span<const cdouble> first_row,
                                        std::span<const cdouble> x);

    // Dense counterpart, mainly an oracle for tests and small sizes.
    ComplexMat toeplitz_dense(std::span<const cdouble> first_col,
                              std::span<const cdouble> first_row);

} // namespace losmimo::numkit

#endif
