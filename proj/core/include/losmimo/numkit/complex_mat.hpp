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

#ifndef LOSMIMO_NUMKIT_COMPLEX_MAT_HPP
#define LOSMIMO_NUMKIT_COMPLEX_MAT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace losmimo::numkit
{
    using cdouble = std::complex<double>;

    // Dense complex matrix, row-major storage. Entries are expected to stay
    // finite; size is fixed at construction.
    class ComplexMat
    {
      public:
        ComplexMat() = default;
        ComplexMat(std::size_t rows, std::size_t cols)
            : rows_(rows), cols_(cols), data_(rows * cols) {}

        static ComplexMat identity(std::size_t n);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        bool empty() const { return data_.empty(); }

        cdouble &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const cdouble &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        std::span<cdouble> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
        std::span<const cdouble> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

        std::vector<cdouble> col(std::size_t c) const;
        void set_col(std::size_t c, std::span<const cdouble> v);

        ComplexMat conj_transpose() const;
        ComplexMat operator*(const ComplexMat &rhs) const;
        std::vector<cdouble> apply(std::span<const cdouble> x) const; // this * x

        // A * diag(d) and diag(d) * A, for unit-cost phase banks
        ComplexMat scale_cols(std::span<const cdouble> d) const;
        ComplexMat scale_rows(std::span<const cdouble> d) const;

        cdouble trace() const;
        double frobenius_norm_sq() const;
        double frobenius_norm() const;
        double max_abs() const;
        bool all_finite() const;

        // max |a_ij - conj(a_ji)| over all entries; 0 for exactly Hermitian
        double hermitian_defect() const;

        std::span<const cdouble> data() const { return data_; }
        std::span<cdouble> data() { return data_; }

      private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<cdouble> data_;
    };

    // Eigendecomposition of a Hermitian matrix: values sorted descending,
    // columns of `vectors` are the matching unit-norm eigenvectors.
    struct EigenSpectrum
    {
        std::vector<double> values;
        ComplexMat vectors;
    };

} // namespace losmimo::numkit

#endif
