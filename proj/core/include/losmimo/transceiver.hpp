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

#ifndef LOSMIMO_TRANSCEIVER_HPP
#define LOSMIMO_TRANSCEIVER_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "losmimo/channel.hpp"
#include "losmimo/numkit/complex_mat.hpp"

namespace losmimo
{
    enum class ChannelModel
    {
        exact, // per-antenna distances
        approx // small-aperture factorization
    };

    // Fourier-precoded transceiver with per-antenna phase banks.
    //
    // d_tx[m] and d_rx[n] are the unit-modulus compensation banks that strip
    // the transmit- and receive-side linear/quadratic phases (the conjugates
    // of the factored channel phases), leaving the Vandermonde core between
    // them. gram_g caches F^H D_tx^H H^H H D_tx F with F the unitary DFT of
    // size n_tx.
    struct TransceiverMatrices
    {
        ComplexMat h_ula;            // n_rx x n_tx, per the selected model
        std::vector<cdouble> d_tx;   // length n_tx
        std::vector<cdouble> d_rx;   // length n_rx
        double eta = 0.0;
        ChannelModel model = ChannelModel::approx;
        ComplexMat gram_g;           // n_tx x n_tx, Hermitian PSD

        int n_tx() const { return static_cast<int>(h_ula.cols()); }
        int n_rx() const { return static_cast<int>(h_ula.rows()); }
        int n_min() const { return std::min(n_tx(), n_rx()); }
        int n_max() const { return std::max(n_tx(), n_rx()); }
    };

    TransceiverMatrices build_transceiver(const ArrayLinkGeometry &geom,
                                          ChannelModel model);

    // Share of the squared Frobenius norm carried by the diagonal, in [0,1].
    double diagonal_power_ratio(const ComplexMat &g);

    // Equal-power streams on the first n_streams Fourier directions with
    // per-stream matched-filter decoding. SINR accounts for inter-stream
    // interference through the off-diagonal Gram entries and for the
    // colored noise variance on the diagonal. Default stream count
    // round(eta n_min) clamped to [1, n_min].
    struct MrcResult
    {
        double rate_bits = 0.0;
        std::vector<double> per_stream_sinr;
        int n_streams = 0;
    };

    MrcResult mrc_spectral_efficiency(const TransceiverMatrices &tm, double snr,
                                      std::optional<int> n_streams = std::nullopt);

    // Best rate over all stream counts 1..n_min.
    MrcResult mrc_best_streams(const TransceiverMatrices &tm, double snr);

    // Reference-table convention: each of the floor(eta n_min) subchannels
    // is scored with its realized diagonal gain |G_kk|^2 against the nominal
    // subchannel noise n_max/eta, interference left out. This is the
    // figure-of-merit behind the published share table; the exact-SINR rate
    // above is the physically achievable one.
    MrcResult mrc_nominal_rate(const TransceiverMatrices &tm, double snr,
                               std::optional<int> n_streams = std::nullopt);

    // Applies the receiver (H D_tx F)^H to y. For the approx model the
    // middle factor is a Toeplitz kernel applied in O(n_max log n_max); the
    // exact model falls back to the dense product. Both routes equal the
    // dense receiver of the stored channel.
    std::vector<cdouble> fast_receive(const TransceiverMatrices &tm,
                                      std::span<const cdouble> y);

    // Dense receiver oracle: materializes (H D_tx F)^H y.
    std::vector<cdouble> dense_receive(const TransceiverMatrices &tm,
                                       std::span<const cdouble> y);

    // Frobenius mismatch between the Gram Toeplitz symbol and its
    // Fourier-diagonalizable circulant surrogate with floor(eta n_min)
    // active modes: err_sq = |T - C|_F^2 and norm_sq = |T|_F^2, both by the
    // Toeplitz summation identity.
    struct SurrogateError
    {
        double err_sq = 0.0;
        double norm_sq = 0.0;
    };

    SurrogateError circulant_surrogate_error(double eta, int n_tx, int n_rx);

} // namespace losmimo

#endif
