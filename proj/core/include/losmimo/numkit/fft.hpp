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

#ifndef LOSMIMO_NUMKIT_FFT_HPP
#define LOSMIMO_NUMKIT_FFT_HPP

#include <span>
#include <vector>

#include "losmimo/numkit/complex_mat.hpp"

namespace losmimo::numkit
{
    // Unitary discrete Fourier transform of arbitrary length (radix-2 for
    // powers of two, Bluestein chirp-z otherwise).
    //
    //   forward: X[k] = (1/sqrt(N)) sum_n x[n] exp(-j 2 pi n k / N)
    //   inverse: X[k] = (1/sqrt(N)) sum_n x[n] exp(+j 2 pi n k / N)
    //
    // Throws std::invalid_argument on empty input.
    std::vector<cdouble> fft(std::span<const cdouble> x, bool inverse = false);

    // Linear convolution length n_out of a with b via zero-padded FFTs.
    std::vector<cdouble> fft_convolve(std::span<const cdouble> a,
                                      std::span<const cdouble> b,
                                      std::size_t n_out);

} // namespace losmimo::numkit

#endif
