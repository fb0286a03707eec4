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

#ifndef LOSMIMO_NUMKIT_EIG_HPP
#define LOSMIMO_NUMKIT_EIG_HPP

#include "losmimo/numkit/complex_mat.hpp"

namespace losmimo::numkit
{
    // Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
    // The input must be square and Hermitian to within 1e-10 of its largest
    // entry; it is symmetrized internally before iterating. Values come back
    // sorted descending with matching unit-norm eigenvector columns.
    EigenSpectrum hermitian_eig(const ComplexMat &a);

    // Same iteration without accumulating eigenvectors; descending values.
    std::vector<double> hermitian_eigenvalues(const ComplexMat &a);

    // Singular value decomposition h = u * diag(s) * v^H obtained by
    // eigendecomposing the smaller Gram matrix (h^H h or h h^H) and
    // recovering the other factor as h v / s. Modes with s below
    // 1e-10 * s_max are completed by an orthonormal complement.
    struct SvdResult
    {
        ComplexMat u;                       // rows(h) x n_min
        std::vector<double> singular_values; // descending, length n_min
        ComplexMat v;                       // cols(h) x n_min
    };

    SvdResult svd_via_gram(const ComplexMat &h);

    // Squared singular values of h (descending), via the smaller Gram matrix.
    std::vector<double> squared_singular_values(const ComplexMat &h);

} // namespace losmimo::numkit

#endif
