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

#include "losmimo/numkit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace losmimo::numkit
{
    namespace
    {
        // One complex Jacobi rotation zeroing a(p,q). The unitary acting on
        // columns p and q is
        //   [ c            s * e^{j phi} ]
        //   [ -s e^{-j phi}      c       ]
        // with a_pq = |a_pq| e^{j phi} and (c, s) the classic real rotation
        // for the 2x2 block [[a_pp, |a_pq|], [|a_pq|, a_qq]].
        struct Rotation
        {
            double c;
            double s;        // signed sine t * c
            cdouble s_phase; // s * e^{j phi}
        };

        Rotation make_rotation(double app, double aqq, cdouble apq)
        {
            const double r = std::abs(apq);
            const cdouble phase = apq / r;
            const double tau = (aqq - app) / (2.0 * r);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            return {c, t * c, (t * c) * phase};
        }

        // Applies J^H A J for the rotation on (p, q), exploiting Hermitian
        // symmetry: the two affected rows are updated contiguously and the
        // matching columns mirrored from their conjugates, so no strided
        // reads occur. vt, when given, accumulates the eigenvectors as rows
        // (V stored transposed, updated contiguously as well).
        void jacobi_sweep_apply(ComplexMat &a, ComplexMat *vt,
                                std::size_t p, std::size_t q, const Rotation &rot)
        {
            const std::size_t n = a.rows();
            const double c = rot.c;
            const cdouble s = rot.s_phase;
            const cdouble sc = std::conj(s);

            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double r = std::abs(a(p, q));
            const double sr = rot.s; // signed

            cdouble *rp = a.data().data() + p * n;
            cdouble *rq = a.data().data() + q * n;
            for (std::size_t k = 0; k < n; ++k)
            {
                const cdouble up = rp[k];
                const cdouble uq = rq[k];
                rp[k] = c * up - s * uq;
                rq[k] = sc * up + c * uq;
            }
            cdouble *base = a.data().data();
            for (std::size_t k = 0; k < n; ++k)
            {
                base[k * n + p] = std::conj(rp[k]);
                base[k * n + q] = std::conj(rq[k]);
            }
            // 2x2 pivot block in closed form (the rotation zeroes (p, q))
            rp[p] = c * c * app - 2.0 * c * sr * r + sr * sr * aqq;
            rq[q] = sr * sr * app + 2.0 * c * sr * r + c * c * aqq;
            rp[q] = 0.0;
            rq[p] = 0.0;

            if (vt)
            {
                // V accumulates right-multiplications by J; in the
                // transposed layout that swaps the sine conjugation
                cdouble *vp = vt->data().data() + p * n;
                cdouble *vq = vt->data().data() + q * n;
                for (std::size_t k = 0; k < n; ++k)
                {
                    const cdouble up = vp[k];
                    const cdouble uq = vq[k];
                    vp[k] = c * up - sc * uq;
                    vq[k] = s * up + c * uq;
                }
            }
        }

        double off_diagonal_norm_sq(const ComplexMat &a)
        {
            double s = 0.0;
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = r + 1; c < a.cols(); ++c)
                    s += 2.0 * std::norm(a(r, c));
            return s;
        }

        ComplexMat symmetrized_input(const ComplexMat &a)
        {
            if (a.rows() != a.cols())
                throw std::invalid_argument("hermitian_eig: matrix must be square");
            if (a.empty())
                throw std::invalid_argument("hermitian_eig: empty matrix");
            const double scale = std::max(a.max_abs(), 1e-300);
            if (a.hermitian_defect() > 1e-10 * scale)
                throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
            ComplexMat w(a.rows(), a.cols());
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < a.cols(); ++c)
                    w(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
            return w;
        }

        // Cyclic Jacobi on w (destroyed); optional eigenvector accumulation
        // into vt (transposed layout). Rotations whose pivot is too small to
        // move the off-diagonal norm past the stopping tolerance are
        // skipped (threshold Jacobi).
        std::vector<double> jacobi(ComplexMat &w, ComplexMat *vt)
        {
            const std::size_t n = w.rows();
            const double norm = std::max(w.frobenius_norm(), 1e-300);
            const double stop = 1e-14 * norm;
            const double skip = stop / static_cast<double>(n);

            for (int sweep = 0; sweep < 60; ++sweep)
            {
                if (std::sqrt(off_diagonal_norm_sq(w)) <= stop)
                    break;
                for (std::size_t p = 0; p + 1 < n; ++p)
                    for (std::size_t q = p + 1; q < n; ++q)
                    {
                        if (std::abs(w(p, q)) <= skip)
                            continue;
                        const Rotation rot =
                            make_rotation(w(p, p).real(), w(q, q).real(), w(p, q));
                        jacobi_sweep_apply(w, vt, p, q, rot);
                    }
            }

            std::vector<double> values(n);
            for (std::size_t i = 0; i < n; ++i)
                values[i] = w(i, i).real();
            return values;
        }

        std::vector<std::size_t> descending_order(const std::vector<double> &v)
        {
            std::vector<std::size_t> idx(v.size());
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
            return idx;
        }

    } // namespace

    EigenSpectrum hermitian_eig(const ComplexMat &a)
    {
        ComplexMat w = symmetrized_input(a);
        ComplexMat vt = ComplexMat::identity(w.rows()); // rows are eigenvectors
        std::vector<double> values = jacobi(w, &vt);

        const auto order = descending_order(values);
        EigenSpectrum out;
        out.values.resize(values.size());
        out.vectors = ComplexMat(vt.rows(), vt.cols());
        for (std::size_t i = 0; i < order.size(); ++i)
        {
            out.values[i] = values[order[i]];
            for (std::size_t r = 0; r < vt.rows(); ++r)
                out.vectors(r, i) = vt(order[i], r);
        }
        return out;
    }

    std::vector<double> hermitian_eigenvalues(const ComplexMat &a)
    {
        ComplexMat w = symmetrized_input(a);
        std::vector<double> values = jacobi(w, nullptr);
        std::sort(values.begin(), values.end(), std::greater<>());
        return values;
    }

    std::vector<double> squared_singular_values(const ComplexMat &h)
    {
        if (h.empty())
            throw std::invalid_argument("squared_singular_values: empty matrix");
        const ComplexMat hh = h.conj_transpose();
        const ComplexMat gram = (h.cols() <= h.rows()) ? hh * h : h * hh;
        std::vector<double> values = hermitian_eigenvalues(gram);
        for (double &v : values)
            v = std::max(v, 0.0);
        return values;
    }

    SvdResult svd_via_gram(const ComplexMat &h)
    {
        if (h.empty())
            throw std::invalid_argument("svd_via_gram: empty matrix");

        const std::size_t n_min = std::min(h.rows(), h.cols());
        const bool tall = h.cols() <= h.rows(); // eigendecompose h^H h
        const ComplexMat hh = h.conj_transpose();
        const ComplexMat gram = tall ? hh * h : h * hh;
        EigenSpectrum es = hermitian_eig(gram);

        SvdResult out;
        out.singular_values.resize(n_min);
        for (std::size_t i = 0; i < n_min; ++i)
            out.singular_values[i] = std::sqrt(std::max(es.values[i], 0.0));
        const double sigma_max = out.singular_values.empty() ? 0.0 : out.singular_values[0];

        const ComplexMat &small_factor = es.vectors; // gram-side singular vectors
        const ComplexMat &other = tall ? h : hh;      // maps gram side to the other side
        ComplexMat recovered(other.rows(), n_min);

        std::vector<std::size_t> dead; // modes below the rank cutoff
        for (std::size_t i = 0; i < n_min; ++i)
        {
            const double s = out.singular_values[i];
            if (s > 1e-10 * sigma_max && s > 0.0)
            {
                std::vector<cdouble> w = other.apply(small_factor.col(i));
                for (cdouble &e : w)
                    e /= s;
                // polish against the previous columns: near-noise modes
                // (sigma at the eigensolver floor) recover junk directions
                // that are only ~sqrt(eps) orthogonal otherwise
                for (int pass = 0; pass < 2; ++pass)
                    for (std::size_t j = 0; j < i; ++j)
                    {
                        cdouble dot = 0.0;
                        for (std::size_t r = 0; r < w.size(); ++r)
                            dot += std::conj(recovered(r, j)) * w[r];
                        for (std::size_t r = 0; r < w.size(); ++r)
                            w[r] -= dot * recovered(r, j);
                    }
                double nrm = 0.0;
                for (const cdouble &e : w)
                    nrm += std::norm(e);
                nrm = std::sqrt(nrm);
                if (nrm > 1e-6)
                    for (std::size_t r = 0; r < w.size(); ++r)
                        recovered(r, i) = w[r] / nrm;
                else
                    dead.push_back(i); // direction fully consumed: complete it
            }
            else
            {
                dead.push_back(i);
            }
        }

        // Complete zero-rank modes with unit vectors orthogonal to every
        // column placed so far (unfilled columns are zero and drop out of
        // the Gram-Schmidt projections).
        std::size_t seed = 0;
        for (std::size_t i : dead)
        {
            std::vector<cdouble> cand(recovered.rows());
            for (; seed < 2 * recovered.rows() + 2; ++seed)
            {
                std::fill(cand.begin(), cand.end(), cdouble{});
                if (seed < recovered.rows())
                    cand[seed] = 1.0;
                else // deterministic fallback direction
                    for (std::size_t r = 0; r < cand.size(); ++r)
                        cand[r] = cdouble(std::cos(0.7 * (double)(r + seed)),
                                          std::sin(1.3 * (double)(r + seed)));
                for (int pass = 0; pass < 2; ++pass) // twice for orthogonality
                    for (std::size_t j = 0; j < n_min; ++j)
                    {
                        if (j == i)
                            continue;
                        cdouble dot = 0.0;
                        for (std::size_t r = 0; r < cand.size(); ++r)
                            dot += std::conj(recovered(r, j)) * cand[r];
                        for (std::size_t r = 0; r < cand.size(); ++r)
                            cand[r] -= dot * recovered(r, j);
                    }
                double nrm = 0.0;
                for (const cdouble &v : cand)
                    nrm += std::norm(v);
                nrm = std::sqrt(nrm);
                if (nrm > 1e-6)
                {
                    for (cdouble &v : cand)
                        v /= nrm;
                    ++seed;
                    break;
                }
            }
            recovered.set_col(i, cand);
        }

        // Trim the gram-side factor to n_min columns
        ComplexMat small_trim(small_factor.rows(), n_min);
        for (std::size_t c = 0; c < n_min; ++c)
            for (std::size_t r = 0; r < small_factor.rows(); ++r)
                small_trim(r, c) = small_factor(r, c);

        if (tall)
        {
            out.u = std::move(recovered);
            out.v = std::move(small_trim);
        }
        else
        {
            out.u = std::move(small_trim);
            out.v = std::move(recovered);
        }
        return out;
    }

} // namespace losmimo::numkit
