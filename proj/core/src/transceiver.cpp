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

#include "losmimo/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "losmimo/numkit/fft.hpp"
#include "losmimo/numkit/toeplitz.hpp"

namespace losmimo
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        cdouble unit_phasor(double angle) { return {std::cos(angle), std::sin(angle)}; }

        // G = F^H K F via row-wise forward and column-wise inverse unitary
        // FFTs; F(a,b) = exp(-j 2 pi a b / n) / sqrt(n).
        ComplexMat fourier_conjugate(const ComplexMat &k)
        {
            const std::size_t n = k.rows();
            ComplexMat kf(n, n);
            for (std::size_t r = 0; r < n; ++r)
            {
                const auto row = numkit::fft(k.row(r), false);
                for (std::size_t c = 0; c < n; ++c)
                    kf(r, c) = row[c];
            }
            ComplexMat g(n, n);
            for (std::size_t c = 0; c < n; ++c)
            {
                const auto col = numkit::fft(kf.col(c), true);
                g.set_col(c, col);
            }
            return g;
        }

        // exp(sign j pi eta l^2 / n_max)
        cdouble quad_chirp(double eta, long l, int n_max, double sign)
        {
            return unit_phasor(sign * pi * eta * static_cast<double>(l) * l / n_max);
        }
    } // namespace

    TransceiverMatrices build_transceiver(const ArrayLinkGeometry &geom,
                                          ChannelModel model)
    {
        geom.validate();
        TransceiverMatrices tm;
        tm.model = model;
        tm.eta = effective_eta(geom);

        const FactoredChannel fac = approx_channel(geom);
        tm.h_ula = (model == ChannelModel::exact) ? exact_channel(geom, true)
                                                  : fac.reconstruct();

        // compensation banks: conjugates of the factored channel phases
        tm.d_tx.resize(fac.tx_phase.size());
        for (std::size_t m = 0; m < tm.d_tx.size(); ++m)
            tm.d_tx[m] = std::conj(fac.tx_phase[m]);
        tm.d_rx.resize(fac.rx_phase.size());
        for (std::size_t n = 0; n < tm.d_rx.size(); ++n)
            tm.d_rx[n] = std::conj(fac.rx_phase[n]);

        const ComplexMat hd = tm.h_ula.scale_cols(tm.d_tx);
        const ComplexMat k = hd.conj_transpose() * hd;
        tm.gram_g = fourier_conjugate(k);
        return tm;
    }

    double diagonal_power_ratio(const ComplexMat &g)
    {
        if (g.rows() != g.cols() || g.empty())
            throw std::invalid_argument("diagonal_power_ratio: matrix must be square");
        double diag = 0.0;
        for (std::size_t i = 0; i < g.rows(); ++i)
            diag += std::norm(g(i, i));
        const double total = g.frobenius_norm_sq();
        return total > 0.0 ? diag / total : 0.0;
    }

    MrcResult mrc_spectral_efficiency(const TransceiverMatrices &tm, double snr,
                                      std::optional<int> n_streams)
    {
        if (!(snr > 0.0))
            throw std::invalid_argument("mrc: snr must be positive");
        const int n_min = tm.n_min();
        int s = n_streams.value_or(
            std::clamp(static_cast<int>(std::lround(tm.eta * n_min)), 1, n_min));
        if (s < 1 || s > n_min)
            throw std::invalid_argument("mrc: stream count out of range");

        const double p = snr / s;
        const ComplexMat &g = tm.gram_g;

        MrcResult res;
        res.n_streams = s;
        res.per_stream_sinr.resize(s);
        for (int k = 0; k < s; ++k)
        {
            const double signal = std::norm(g(k, k)) * p;
            double interference = 0.0;
            for (int j = 0; j < s; ++j)
                if (j != k)
                    interference += std::norm(g(k, j)) * p;
            const double noise = std::max(g(k, k).real(), 0.0);
            const double sinr = signal / (interference + noise);
            res.per_stream_sinr[k] = sinr;
            res.rate_bits += std::log2(1.0 + sinr);
        }
        return res;
    }

    MrcResult mrc_best_streams(const TransceiverMatrices &tm, double snr)
    {
        MrcResult best;
        for (int s = 1; s <= tm.n_min(); ++s)
        {
            MrcResult r = mrc_spectral_efficiency(tm, snr, s);
            if (r.rate_bits > best.rate_bits)
                best = std::move(r);
        }
        return best;
    }

    MrcResult mrc_nominal_rate(const TransceiverMatrices &tm, double snr,
                               std::optional<int> n_streams)
    {
        if (!(snr > 0.0))
            throw std::invalid_argument("mrc: snr must be positive");
        const int n_min = tm.n_min();
        // the nudge keeps eta values that only differ by trig roundoff
        // (e.g. cos(acos(1))) on the intended stream count
        const int s = n_streams.value_or(std::clamp(
            static_cast<int>(std::floor(tm.eta * n_min + 1e-9)), 1, n_min));
        if (s < 1 || s > n_min)
            throw std::invalid_argument("mrc: stream count out of range");

        const double p = snr / s;
        const double nominal_noise = tm.n_max() / tm.eta;

        MrcResult res;
        res.n_streams = s;
        res.per_stream_sinr.resize(s);
        for (int k = 0; k < s; ++k)
        {
            const double sinr = std::norm(tm.gram_g(k, k)) * p / nominal_noise;
            res.per_stream_sinr[k] = sinr;
            res.rate_bits += std::log2(1.0 + sinr);
        }
        return res;
    }

    std::vector<cdouble> fast_receive(const TransceiverMatrices &tm,
                                      std::span<const cdouble> y)
    {
        const int n_rx = tm.n_rx();
        const int n_tx = tm.n_tx();
        if (static_cast<int>(y.size()) != n_rx)
            throw std::invalid_argument("fast_receive: vector length mismatch");

        std::vector<cdouble> s(n_tx);
        if (tm.model == ChannelModel::approx)
        {
            const int n_max = tm.n_max();
            // (D_rx H D_tx)^H factors into chirp * Toeplitz * chirp
            std::vector<cdouble> u(n_rx);
            for (int n = 0; n < n_rx; ++n)
                u[n] = quad_chirp(tm.eta, n, n_max, -1.0) * tm.d_rx[n] * y[n];

            std::vector<cdouble> col(n_tx), row(n_rx);
            for (int i = 0; i < n_tx; ++i)
                col[i] = quad_chirp(tm.eta, i, n_max, +1.0);
            for (int j = 0; j < n_rx; ++j)
                row[j] = quad_chirp(tm.eta, j, n_max, +1.0);
            const std::vector<cdouble> z = numkit::toeplitz_apply(col, row, u);

            for (int m = 0; m < n_tx; ++m)
                s[m] = quad_chirp(tm.eta, m, n_max, -1.0) * z[m];
        }
        else
        {
            // (H D_tx F)^H y = F^H D_tx^H (H^H y); dense middle product
            const ComplexMat hh = tm.h_ula.conj_transpose();
            const std::vector<cdouble> w = hh.apply(y);
            for (int m = 0; m < n_tx; ++m)
                s[m] = std::conj(tm.d_tx[m]) * w[m];
        }
        return numkit::fft(s, true); // F^H = unitary inverse DFT
    }

    std::vector<cdouble> dense_receive(const TransceiverMatrices &tm,
                                       std::span<const cdouble> y)
    {
        const int n_tx = tm.n_tx();
        if (static_cast<int>(y.size()) != tm.n_rx())
            throw std::invalid_argument("dense_receive: vector length mismatch");
        const ComplexMat hh = tm.h_ula.conj_transpose();
        const std::vector<cdouble> w = hh.apply(y);
        std::vector<cdouble> s(n_tx);
        for (int m = 0; m < n_tx; ++m)
            s[m] = std::conj(tm.d_tx[m]) * w[m];
        return numkit::fft(s, true);
    }

    SurrogateError circulant_surrogate_error(double eta, int n_tx, int n_rx)
    {
        if (!(eta > 0.0) || eta > 1.0 + 1e-12)
            throw std::invalid_argument("circulant_surrogate_error: eta must be in (0, 1]");
        if (n_tx < 1 || n_rx < 1)
            throw std::invalid_argument("circulant_surrogate_error: counts must be >= 1");

        const int n_min = std::min(n_tx, n_rx);
        const int n_max = std::max(n_tx, n_rx);
        const int active = static_cast<int>(std::floor(eta * n_min));

        SurrogateError out;
        for (long l = -(n_tx - 1); l <= n_tx - 1; ++l)
        {
            cdouble t, c;
            if (l == 0)
            {
                t = static_cast<double>(n_rx);
                c = active * n_max / (eta * n_tx);
            }
            else
            {
                const double ld = static_cast<double>(l);
                t = unit_phasor(-pi * eta * ld * (n_rx - 1) / n_max) *
                    (std::sin(pi * eta * ld * n_rx / n_max) /
                     std::sin(pi * eta * ld / n_max));
                c = unit_phasor(-pi * ld * (active - 1) / n_tx) *
                    (std::sin(pi * ld * active / n_tx) /
                     (eta * n_tx / n_max * std::sin(pi * ld / n_tx)));
            }
            const double weight = static_cast<double>(n_tx) - std::abs((double)l);
            out.err_sq += weight * std::norm(t - c);
            out.norm_sq += weight * std::norm(t);
        }
        return out;
    }

} // namespace losmimo
