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

#include "losmimo/numkit/toeplitz.hpp"

#include <cmath>
#include <stdexcept>

#include "losmimo/numkit/fft.hpp"

namespace losmimo::numkit
{
    namespace
    {
        void validate(std::span<const cdouble> first_col,
                      std::span<const cdouble> first_row,
                      std::size_t x_len)
        {
            if (first_col.empty() || first_row.empty())
                throw std::invalid_argument("toeplitz: empty column or row");
            if (std::abs(first_col[0] - first_row[0]) >
                1e-12 * (1.0 + std::abs(first_col[0])))
                throw std::invalid_argument("toeplitz: corner entries disagree");
            if (x_len != first_row.size())
                throw std::invalid_argument("toeplitz: vector length mismatch");
        }
    } // namespace

    std::vector<cdouble> toeplitz_apply(std::span<const cdouble> first_col,
                                        std::span<const cdouble> first_row,
                                        std::span<const cdouble> x)
    {
        validate(first_col, first_row, x.size());
        const std::size_t m = first_col.size();
        const std::size_t n = first_row.size();

        // T(i,j) = t[i - j], assembled as t[-(n-1)] .. t[m-1]. Convolving
        // with x gives y[i] = sum_j t[i - j] x[j] at offset n-1.
        std::vector<cdouble> sym(m + n - 1);
        for (std::size_t j = 0; j < n; ++j)
            sym[n - 1 - j] = first_row[j];
        for (std::size_t i = 0; i < m; ++i)
            sym[n - 1 + i] = first_col[i];

        const std::vector<cdouble> conv = fft_convolve(sym, x, m + n - 1);
        return {conv.begin() + static_cast<std::ptrdiff_t>(n - 1), conv.end()};
    }

    ComplexMat toeplitz_dense(std::span<const cdouble> first_col,
                              std::span<const cdouble> first_row)
    {
        validate(first_col, first_row, first_row.size());
        const std::size_t m = first_col.size();
        const std::size_t n = first_row.size();
        ComplexMat t(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t(i, j) = (i >= j) ? first_col[i - j] : first_row[j - i];
        return t;
    }

} // namespace losmimo::numkit
