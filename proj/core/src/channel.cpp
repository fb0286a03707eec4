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

#include "losmimo/channel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace losmimo
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        cdouble unit_phasor(double angle) { return {std::cos(angle), std::sin(angle)}; }
    } // namespace

    void ArrayLinkGeometry::validate() const
    {
        if (!(wavelength > 0.0))
            throw std::invalid_argument("geometry: wavelength must be positive");
        if (!(range > 0.0))
            throw std::invalid_argument("geometry: range must be positive");
        if (n_tx < 1 || n_rx < 1)
            throw std::invalid_argument("geometry: antenna counts must be >= 1");
        if (!(spacing_tx > 0.0) || !(spacing_rx > 0.0))
            throw std::invalid_argument("geometry: spacings must be positive");
        if (std::abs(elev_tx) > pi / 2 + 1e-12 || std::abs(elev_rx) > pi / 2 + 1e-12)
            throw std::invalid_argument("geometry: elevation angles must be within +/- pi/2");
        if (!(gain_tx > 0.0) || !(gain_rx > 0.0))
            throw std::invalid_argument("geometry: gains must be positive");
    }

    bool ArrayLinkGeometry::within_aperture_limit(double factor) const
    {
        return std::max(aperture_tx(), aperture_rx()) <= factor * range;
    }

    ArrayLinkGeometry ArrayLinkGeometry::rayleigh(double wavelength, double range,
                                                  int n_tx, int n_rx,
                                                  double theta_r, double theta_t)
    {
        const int n_max = std::max(n_tx, n_rx);
        ArrayLinkGeometry g;
        g.wavelength = wavelength;
        g.range = range;
        g.n_tx = n_tx;
        g.n_rx = n_rx;
        g.spacing_tx = rayleigh_spacing(wavelength, range, n_max);
        g.spacing_rx = g.spacing_tx;
        g.elev_tx = theta_t;
        g.elev_rx = theta_r;
        g.azim_rel = pi / 2;
        g.validate();
        return g;
    }

    double rayleigh_spacing(double wavelength, double range, int n)
    {
        if (n < 1 || !(wavelength > 0.0) || !(range > 0.0))
            throw std::invalid_argument("rayleigh_spacing: bad arguments");
        return std::sqrt(wavelength * range / static_cast<double>(n));
    }

    std::string ArrayLinkGeometry::to_json() const
    {
        nlohmann::ordered_json j;
        j["wavelength"] = wavelength;
        j["range"] = range;
        j["n_tx"] = n_tx;
        j["n_rx"] = n_rx;
        j["spacing_tx"] = spacing_tx;
        j["spacing_rx"] = spacing_rx;
        j["elev_tx"] = elev_tx;
        j["elev_rx"] = elev_rx;
        j["azim_rel"] = azim_rel;
        j["gain_tx"] = gain_tx;
        j["gain_rx"] = gain_rx;
        return j.dump(2);
    }

    ArrayLinkGeometry ArrayLinkGeometry::from_json(const std::string &text)
    {
        const nlohmann::json j = nlohmann::json::parse(text);
        ArrayLinkGeometry g;
        g.wavelength = j.at("wavelength").get<double>();
        g.range = j.at("range").get<double>();
        g.n_tx = j.at("n_tx").get<int>();
        g.n_rx = j.at("n_rx").get<int>();
        g.spacing_tx = j.at("spacing_tx").get<double>();
        g.spacing_rx = j.at("spacing_rx").get<double>();
        g.elev_tx = j.value("elev_tx", 0.0);
        g.elev_rx = j.value("elev_rx", 0.0);
        g.azim_rel = j.value("azim_rel", pi / 2);
        g.gain_tx = j.value("gain_tx", 1.0);
        g.gain_rx = j.value("gain_rx", 1.0);
        g.validate();
        return g;
    }

    ArrayLinkGeometry ArrayLinkGeometry::load(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("geometry: cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return from_json(ss.str());
    }

    void ArrayLinkGeometry::save(const std::string &path) const
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("geometry: cannot write " + path);
        out << to_json() << "\n";
    }

    LinkBudget LinkBudget::from_snr(double snr_linear)
    {
        if (!(snr_linear > 0.0))
            throw std::invalid_argument("link budget: snr must be positive");
        return {snr_linear};
    }

    LinkBudget LinkBudget::from_power(const ArrayLinkGeometry &geom,
                                      double tx_power_w, double bandwidth_hz,
                                      double noise_density_w_per_hz)
    {
        geom.validate();
        if (!(tx_power_w > 0.0) || !(bandwidth_hz > 0.0) || !(noise_density_w_per_hz > 0.0))
            throw std::invalid_argument("link budget: power, bandwidth, N0 must be positive");
        const double denom = std::pow(4.0 * pi * geom.range, 2) * bandwidth_hz *
                             noise_density_w_per_hz;
        const double snr = geom.wavelength * geom.wavelength * geom.gain_tx *
                           geom.gain_rx * tx_power_w / denom;
        return {snr};
    }

    ComplexMat exact_channel(const ArrayLinkGeometry &geom, bool normalized)
    {
        geom.validate();
        const double lam = geom.wavelength;
        const double d = geom.range;
        const double st = std::sin(geom.elev_tx), ct = std::cos(geom.elev_tx);
        const double sr = std::sin(geom.elev_rx), cr = std::cos(geom.elev_rx);
        const double cp = std::cos(geom.azim_rel), sp = std::sin(geom.azim_rel);
        const double amp_num = std::sqrt(geom.gain_tx * geom.gain_rx) * lam / (4.0 * pi);

        ComplexMat h(geom.n_rx, geom.n_tx);
        for (int n = 0; n < geom.n_rx; ++n)
        {
            const double rx = n * geom.spacing_rx;
            for (int m = 0; m < geom.n_tx; ++m)
            {
                const double tx = m * geom.spacing_tx;
                const double dz = d + rx * sr * cp - tx * st;
                const double dx = rx * cr - tx * ct;
                const double dy = rx * sr * sp;
                const double dist = std::sqrt(dz * dz + dx * dx + dy * dy);
                cdouble v = unit_phasor(-2.0 * pi * dist / lam);
                if (!normalized)
                    v *= amp_num / dist;
                h(n, m) = v;
            }
        }
        return h;
    }

    FactoredChannel approx_channel(const ArrayLinkGeometry &geom)
    {
        geom.validate();
        const double lam = geom.wavelength;
        const double d = geom.range;
        const double st = std::sin(geom.elev_tx), ct = std::cos(geom.elev_tx);
        const double sr = std::sin(geom.elev_rx), cr = std::cos(geom.elev_rx);
        const double cp = std::cos(geom.azim_rel);

        FactoredChannel f;
        f.eta = effective_eta(geom);

        f.rx_phase.resize(geom.n_rx);
        const double rx_quad = 1.0 - sr * sr * cp * cp;
        for (int n = 0; n < geom.n_rx; ++n)
        {
            const double ang = -2.0 * pi * d / lam -
                               pi * (2.0 * n * geom.spacing_rx * sr * cp / lam +
                                     (double)n * n * geom.spacing_rx * geom.spacing_rx *
                                         rx_quad / (lam * d));
            f.rx_phase[n] = unit_phasor(ang);
        }

        f.tx_phase.resize(geom.n_tx);
        for (int m = 0; m < geom.n_tx; ++m)
        {
            const double ang = -pi * (2.0 * m * geom.spacing_tx * st / lam +
                                      (double)m * m * geom.spacing_tx * geom.spacing_tx /
                                          (lam * d));
            f.tx_phase[m] = unit_phasor(ang);
        }

        // equals 2 pi eta / n_max by the definition of eta
        const double core_coeff = 2.0 * pi * geom.spacing_rx * geom.spacing_tx * cr * ct /
                                  (lam * d);
        f.core = ComplexMat(geom.n_rx, geom.n_tx);
        for (int n = 0; n < geom.n_rx; ++n)
            for (int m = 0; m < geom.n_tx; ++m)
                f.core(n, m) = unit_phasor(core_coeff * n * m);
        return f;
    }

    ComplexMat FactoredChannel::reconstruct() const
    {
        ComplexMat h(core.rows(), core.cols());
        for (std::size_t n = 0; n < core.rows(); ++n)
            for (std::size_t m = 0; m < core.cols(); ++m)
                h(n, m) = rx_phase[n] * core(n, m) * tx_phase[m];
        return h;
    }

    ComplexMat vandermonde_channel(const UlaChannelSpec &spec)
    {
        if (spec.n_tx < 1 || spec.n_rx < 1)
            throw std::invalid_argument("vandermonde_channel: counts must be >= 1");
        if (!(spec.eta > 0.0))
            throw std::invalid_argument("vandermonde_channel: eta must be positive");
        const double coeff = 2.0 * pi * spec.eta / spec.n_max();
        ComplexMat h(spec.n_rx, spec.n_tx);
        for (int n = 0; n < spec.n_rx; ++n)
            for (int m = 0; m < spec.n_tx; ++m)
                h(n, m) = unit_phasor(coeff * n * m);
        return h;
    }

    double effective_eta(const ArrayLinkGeometry &geom)
    {
        geom.validate();
        const int n_max = std::max(geom.n_tx, geom.n_rx);
        return geom.spacing_rx * std::cos(geom.elev_rx) * geom.spacing_tx *
               std::cos(geom.elev_tx) * n_max / (geom.wavelength * geom.range);
    }

    cdouble gram_closed_form(const UlaChannelSpec &spec, int n, int m)
    {
        if (n < 0 || m < 0 || n >= spec.n_tx || m >= spec.n_tx)
            throw std::invalid_argument("gram_closed_form: index out of range");
        if (n == m)
            return {static_cast<double>(spec.n_rx), 0.0};

        const double n_max = spec.n_max();
        const double diff = static_cast<double>(n - m);
        const double den = std::sin(pi * spec.eta * diff / n_max);
        if (std::abs(den) < 1e-12) // grating alignment: fall back to the sum
        {
            cdouble acc = 0.0;
            for (int l = 0; l < spec.n_rx; ++l)
                acc += unit_phasor(-2.0 * pi * spec.eta * diff * l / n_max);
            return acc;
        }
        const double num = std::sin(pi * spec.eta * diff * spec.n_rx / n_max);
        const cdouble phase = unit_phasor(-pi * spec.eta * diff * (spec.n_rx - 1) / n_max);
        return (num / den) * phase;
    }

    ComplexMat vandermonde_gram(const UlaChannelSpec &spec)
    {
        ComplexMat g(spec.n_tx, spec.n_tx);
        for (int n = 0; n < spec.n_tx; ++n)
        {
            g(n, n) = static_cast<double>(spec.n_rx);
            for (int m = 0; m < n; ++m)
            {
                const cdouble v = gram_closed_form(spec, n, m);
                g(n, m) = v;
                g(m, n) = std::conj(v);
            }
        }
        return g;
    }

} // namespace losmimo
