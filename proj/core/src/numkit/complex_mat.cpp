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

#include "losmimo/numkit/complex_mat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace losmimo::numkit
{

    ComplexMat ComplexMat::identity(std::size_t n)
    {
        ComplexMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    std::vector<cdouble> ComplexMat::col(std::size_t c) const
    {
        std::vector<cdouble> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    void ComplexMat::set_col(std::size_t c, std::span<const cdouble> v)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, c) = v[r];
    }

    ComplexMat ComplexMat::conj_transpose() const
    {
        ComplexMat m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    ComplexMat ComplexMat::operator*(const ComplexMat &rhs) const
    {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("ComplexMat multiply: dimension mismatch");
        ComplexMat out(rows_, rhs.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
        {
            const cdouble *a = data_.data() + r * cols_;
            cdouble *o = out.data_.data() + r * rhs.cols_;
            for (std::size_t k = 0; k < cols_; ++k)
            {
                const cdouble av = a[k];
                if (av == cdouble{})
                    continue;
                const cdouble *b = rhs.data_.data() + k * rhs.cols_;
                for (std::size_t c = 0; c < rhs.cols_; ++c)
                    o[c] += av * b[c];
            }
        }
        return out;
    }

    std::vector<cdouble> ComplexMat::apply(std::span<const cdouble> x) const
    {
        if (x.size() != cols_)
            throw std::invalid_argument("ComplexMat apply: dimension mismatch");
        std::vector<cdouble> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
        {
            cdouble acc = 0.0;
            const cdouble *a = data_.data() + r * cols_;
            for (std::size_t c = 0; c < cols_; ++c)
                acc += a[c] * x[c];
            y[r] = acc;
        }
        return y;
    }

    ComplexMat ComplexMat::scale_cols(std::span<const cdouble> d) const
    {
        if (d.size() != cols_)
            throw std::invalid_argument("scale_cols: dimension mismatch");
        ComplexMat out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(r, c) = (*this)(r, c) * d[c];
        return out;
    }

    ComplexMat ComplexMat::scale_rows(std::span<const cdouble> d) const
    {
        if (d.size() != rows_)
            throw std::invalid_argument("scale_rows: dimension mismatch");
        ComplexMat out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(r, c) = (*this)(r, c) * d[r];
        return out;
    }

    cdouble ComplexMat::trace() const
    {
        cdouble t = 0.0;
        const std::size_t n = rows_ < cols_ ? rows_ : cols_;
        for (std::size_t i = 0; i < n; ++i)
            t += (*this)(i, i);
        return t;
    }

    double ComplexMat::frobenius_norm_sq() const
    {
        double s = 0.0;
        for (const cdouble &v : data_)
            s += std::norm(v);
        return s;
    }

    double ComplexMat::frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

    double ComplexMat::max_abs() const
    {
        double m = 0.0;
        for (const cdouble &v : data_)
            m = std::max(m, std::abs(v));
        return m;
    }

    bool ComplexMat::all_finite() const
    {
        for (const cdouble &v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                return false;
        return true;
    }

    double ComplexMat::hermitian_defect() const
    {
        if (rows_ != cols_)
            return std::numeric_limits<double>::infinity();
        double d = 0.0;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r; c < cols_; ++c)
                d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        return d;
    }

} // namespace losmimo::numkit
