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

#ifndef LOSMIMO_CHANNEL_HPP
#define LOSMIMO_CHANNEL_HPP

#include <string>
#include <vector>

#include "losmimo/numkit/complex_mat.hpp"

namespace losmimo
{
    using numkit::cdouble;
    using numkit::ComplexMat;

    // Physical description of a transmit/receive ULA pair.
    //
    // Convention: the transmit ULA lies in the xz plane through the origin,
    // antenna 0 at the origin, tilted by elev_tx from the x axis. The
    // receive ULA starts at (0, 0, range), tilted by elev_rx, with azimuth
    // azim_rel between the array planes. All lengths in meters, angles in
    // radians, gains linear.
    struct ArrayLinkGeometry
    {
        double wavelength = 0.0; // lambda [m]
        double range = 0.0;      // D, boresight distance TX(0) -> RX(0) [m]
        int n_tx = 0;
        int n_rx = 0;
        double spacing_tx = 0.0; // d_t [m]
        double spacing_rx = 0.0; // d_r [m]
        double elev_tx = 0.0;    // theta_t [rad]
        double elev_rx = 0.0;    // theta_r [rad]
        double azim_rel = 1.5707963267948966; // phi_r [rad]
        double gain_tx = 1.0;
        double gain_rx = 1.0;

        // Throws std::invalid_argument when a field is out of range.
        void validate() const;

        double aperture_tx() const { return (n_tx - 1) * spacing_tx; }
        double aperture_rx() const { return (n_rx - 1) * spacing_rx; }

        // True when both apertures stay within `factor` of the range; the
        // factored small-aperture model degrades outside this regime.
        bool within_aperture_limit(double factor = 0.1) const;

        // Rayleigh-spaced pair at broadside TX with the receive array
        // rotated by theta_r.
        static ArrayLinkGeometry rayleigh(double wavelength, double range,
                                          int n_tx, int n_rx,
                                          double theta_r = 0.0,
                                          double theta_t = 0.0);

        std::string to_json() const;
        static ArrayLinkGeometry from_json(const std::string &text);
        static ArrayLinkGeometry load(const std::string &path);
        void save(const std::string &path) const;
    };

    // d = sqrt(lambda D / n): the spacing that makes a parallel n x n pair
    // orthogonal (eta = 1).
    double rayleigh_spacing(double wavelength, double range, int n);

    // Dimensionless ULA configuration: the core channel matrix is
    // exp(j 2 pi eta n m / n_max).
    struct UlaChannelSpec
    {
        double eta = 1.0;
        int n_tx = 0;
        int n_rx = 0;
        int n_max() const { return n_tx > n_rx ? n_tx : n_rx; }
        int n_min() const { return n_tx < n_rx ? n_tx : n_rx; }
    };

    // Receive SNR, either given directly or derived from a power budget.
    struct LinkBudget
    {
        double snr = 0.0; // linear
        static LinkBudget from_snr(double snr_linear);
        static LinkBudget from_power(const ArrayLinkGeometry &geom,
                                     double tx_power_w, double bandwidth_hz,
                                     double noise_density_w_per_hz);
    };

    // Exact far-field channel from per-antenna distances. Normalized keeps
    // unit-magnitude entries (phase only); otherwise the spherical-spreading
    // amplitude sqrt(Gt Gr) lambda / (4 pi d) is applied per entry.
    ComplexMat exact_channel(const ArrayLinkGeometry &geom, bool normalized = true);

    // Small-aperture factorization H ~ diag(rx_phase) * core * diag(tx_phase)
    // with a pure Vandermonde core in eta. rx_phase carries the common
    // exp(-j 2 pi D / lambda) term plus the receive-side linear/quadratic
    // phases; tx_phase the transmit-side ones.
    struct FactoredChannel
    {
        std::vector<cdouble> rx_phase; // length n_rx, unit modulus
        ComplexMat core;               // n_rx x n_tx Vandermonde factor
        std::vector<cdouble> tx_phase; // length n_tx, unit modulus
        double eta = 0.0;

        ComplexMat reconstruct() const;
    };

    FactoredChannel approx_channel(const ArrayLinkGeometry &geom);

    // The Vandermonde matrix with entries exp(j 2 pi eta n m / n_max),
    // n = 0..n_rx-1 rows, m = 0..n_tx-1 columns.
    ComplexMat vandermonde_channel(const UlaChannelSpec &spec);

    // eta = d_r d_t cos(theta_r) cos(theta_t) n_max / (lambda D).
    double effective_eta(const ArrayLinkGeometry &geom);

    // Closed-form Gram entry [H^H H]_{n,m} (Dirichlet kernel); equals n_rx
    // on the diagonal.
    cdouble gram_closed_form(const UlaChannelSpec &spec, int n, int m);

    // Dense Gram H^H H of the Vandermonde channel from the closed form.
    ComplexMat vandermonde_gram(const UlaChannelSpec &spec);

} // namespace losmimo

#endif
