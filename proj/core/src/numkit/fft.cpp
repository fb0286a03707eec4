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

#include "losmimo/numkit/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace losmimo::numkit
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

        std::size_t next_pow2(std::size_t n)
        {
            std::size_t p = 1;
            while (p < n)
                p <<= 1;
            return p;
        }

        // In-place iterative radix-2 transform, unscaled:
        //   out[k] = sum_n in[n] exp(sign * j 2 pi n k / N)
        void fft_pow2(std::vector<cdouble> &a, double sign)
        {
            const std::size_t n = a.size();
            for (std::size_t i = 1, j = 0; i < n; ++i)
            {
                std::size_t bit = n >> 1;
                for (; j & bit; bit >>= 1)
                    j ^= bit;
                j ^= bit;
                if (i < j)
                    std::swap(a[i], a[j]);
            }
            for (std::size_t len = 2; len <= n; len <<= 1)
            {
                const double ang = sign * 2.0 * pi / static_cast<double>(len);
                const cdouble wl(std::cos(ang), std::sin(ang));
                for (std::size_t i = 0; i < n; i += len)
                {
                    cdouble w(1.0, 0.0);
                    for (std::size_t k = 0; k < len / 2; ++k)
                    {
                        const cdouble u = a[i + k];
                        const cdouble v = a[i + k + len / 2] * w;
                        a[i + k] = u + v;
                        a[i + k + len / 2] = u - v;
                        w *= wl;
                    }
                }
            }
        }

        // exp(sign * j pi k^2 / n) with the quadratic index reduced mod 2n,
        // keeping the trig argument small for large k
        cdouble chirp(std::size_t k, std::size_t n, double sign)
        {
            const unsigned long long m = (static_cast<unsigned long long>(k) * k) %
                                         (2ULL * static_cast<unsigned long long>(n));
            const double ang = sign * pi * static_cast<double>(m) / static_cast<double>(n);
            return {std::cos(ang), std::sin(ang)};
        }

        // Bluestein: arbitrary-length unscaled DFT via one power-of-two
        // circular convolution
        std::vector<cdouble> dft_bluestein(std::span<const cdouble> x, double sign)
        {
            const std::size_t n = x.size();
            const std::size_t m = next_pow2(2 * n - 1);

            std::vector<cdouble> a(m), b(m);
            for (std::size_t k = 0; k < n; ++k)
                a[k] = x[k] * chirp(k, n, sign);
            b[0] = 1.0;
            for (std::size_t k = 1; k < n; ++k)
                b[k] = b[m - k] = chirp(k, n, -sign);

            fft_pow2(a, -1.0);
            fft_pow2(b, -1.0);
            for (std::size_t k = 0; k < m; ++k)
                a[k] *= b[k];
            fft_pow2(a, +1.0);

            std::vector<cdouble> out(n);
            const double inv_m = 1.0 / static_cast<double>(m);
            for (std::size_t k = 0; k < n; ++k)
                out[k] = a[k] * inv_m * chirp(k, n, sign);
            return out;
        }

    } // namespace

    std::vector<cdouble> fft(std::span<const cdouble> x, bool inverse)
    {
        const std::size_t n = x.size();
        if (n == 0)
            throw std::invalid_argument("fft: empty input");

        const double sign = inverse ? +1.0 : -1.0;
        std::vector<cdouble> out;
        if (is_pow2(n))
        {
            out.assign(x.begin(), x.end());
            fft_pow2(out, sign);
        }
        else
        {
            out = dft_bluestein(x, sign);
        }
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (cdouble &v : out)
            v *= scale;
        return out;
    }

    std::vector<cdouble> fft_convolve(std::span<const cdouble> a,
                                      std::span<const cdouble> b,
                                      std::size_t n_out)
    {
        if (a.empty() || b.empty())
            throw std::invalid_argument("fft_convolve: empty input");
        const std::size_t m = next_pow2(a.size() + b.size() - 1);
        std::vector<cdouble> fa(m), fb(m);
        std::copy(a.begin(), a.end(), fa.begin());
        std::copy(b.begin(), b.end(), fb.begin());
        fft_pow2(fa, -1.0);
        fft_pow2(fb, -1.0);
        for (std::size_t k = 0; k < m; ++k)
            fa[k] *= fb[k];
        fft_pow2(fa, +1.0);
        const double inv_m = 1.0 / static_cast<double>(m);
        std::vector<cdouble> out(n_out);
        for (std::size_t k = 0; k < n_out && k < m; ++k)
            out[k] = fa[k] * inv_m;
        return out;
    }

} // namespace losmimo::numkit
