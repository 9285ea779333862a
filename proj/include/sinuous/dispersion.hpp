// SPDX-License-Identifier: Apache-2.0
//
// sinuous-disp: dispersion modelling and pulse compression for sinuous antennas
// Copyright (C) 2026 The sinuous-disp Authors
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

#ifndef SINUOUS_DISPERSION_HPP
#define SINUOUS_DISPERSION_HPP

#include "sinuous/spectral.hpp"

#include <optional>

namespace sinuous
{
    /*!
     * Log-periodic dispersion phase model
     *
     *   Phi(w) = -phi0 * ln(w / w0)                       for f >= f_low
     *   Phi(w) = Phi(w_L) + tau_c * (w_L - w)             for f <  f_low
     *
     * The low-frequency cap replaces the log law by a constant group delay
     * tau_c and is continuous in phase at w_L. Without a cap the log law is
     * used everywhere. The group delay of the log law is phi0 / w.
     *
     * Sign convention shared by the whole toolkit: a dispersed spectrum is
     * X(w) exp(+j Phi(w)), compression multiplies by exp(-j Phi(w)), and
     * free-space propagation over r carries exp(-j w r / v).
     */
    struct DispersionModel
    {
        double phi0 = 1.0;            // rad
        double f0 = 1.0;              // Hz, zero-phase frequency
        std::optional<double> f_low;  // Hz, cap cutoff
        std::optional<double> tau_c;  // s, group delay below f_low

        void validate() const;

        bool capped() const { return f_low.has_value(); }

        // Model phase at f > 0 (rad).
        double phase(double f) const;

        // Analytic group delay at f > 0 (s).
        double group_delay(double f) const;
    };

    // phi0 = -pi / ln(tau), uncapped.
    DispersionModel default_model(double tau, double f0);

    // Adds a low-frequency cap. Without an explicit tau_c the cap keeps the
    // group delay continuous: tau_c = phi0 / w_L.
    DispersionModel with_cap(DispersionModel model, double f_low, std::optional<double> tau_c = std::nullopt);

    PhaseCurve model_phase(const DispersionModel &model, const FrequencyGrid &grid);

    DelayCurve model_group_delay(const DispersionModel &model, const FrequencyGrid &grid);

    // Largest model group delay over the grid (s).
    double max_group_delay(const DispersionModel &model, const FrequencyGrid &grid);

    // values[k] * exp(+j passes Phi(w_k))
    ComplexSpectrum apply_dispersion(const ComplexSpectrum &spectrum, const DispersionModel &model, int passes);

    // values[k] * exp(-j passes Phi(w_k))
    ComplexSpectrum compress(const ComplexSpectrum &spectrum, const DispersionModel &model, int passes);
}

#endif
