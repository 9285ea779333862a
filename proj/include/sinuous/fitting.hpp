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

#ifndef SINUOUS_FITTING_HPP
#define SINUOUS_FITTING_HPP

#include "sinuous/dispersion.hpp"
#include "sinuous/spectral.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sinuous
{
    struct FitBand
    {
        double f_min; // Hz
        double f_max; // Hz
    };

    enum class Weighting
    {
        uniform,
        inverse_frequency, // w_k = 1 / f_k
    };

    struct FitConfig
    {
        FitBand band{0.0, 0.0};
        bool fit_cap = false;          // f_low and tau_c become free parameters
        bool tau_c_continuous = false; // with fit_cap: tau_c tied to phi0 / w_L
        DispersionModel init;
        int restarts = 4;
        int max_iters = 4000;
        double tol = 1e-12;
        Weighting weighting = Weighting::uniform;
        std::uint64_t seed = 0;

        void validate() const;
    };

    struct FitResult
    {
        DispersionModel model;
        double rms_residual = 0.0; // rad
        int iterations = 0;
        bool converged = false;
        bool tau_c_identified = true; // false when the data cannot constrain tau_c
        int best_restart = 0;
    };

    // Weighted mean of (Phi_model - Phi_ref - c)^2 over the in-band samples,
    // with c the optimal constant offset. The offset removes the 2 pi m and
    // anchoring ambiguity of an unwrapped reference.
    double phase_objective(const DispersionModel &model, const PhaseCurve &reference, FitBand band,
                           Weighting weighting = Weighting::uniform);

    // Optimal offset c of phase_objective (model minus reference).
    double phase_offset(const DispersionModel &model, const PhaseCurve &reference, FitBand band,
                        Weighting weighting = Weighting::uniform);

    // Fits phi0 (the cap, if init has one, stays fixed). Because the
    // objective ignores constant offsets, w0 only moves the curve up or down;
    // the returned f0 is the value that also matches the reference's absolute
    // level in the least-squares sense.
    FitResult fit(const PhaseCurve &reference, const FitConfig &config);

    // Fits phi0, f_low and tau_c (or only phi0 and f_low when
    // tau_c_continuous). f_low is kept strictly inside the fit band.
    FitResult fit_with_cap(const PhaseCurve &reference, const FitConfig &config);

    // Derivative-free simplex search used by the fitters.
    struct SimplexResult
    {
        std::vector<double> x;
        double value;
        int iterations;
        bool converged;
    };

    SimplexResult nelder_mead(const std::function<double(const std::vector<double> &)> &objective,
                              std::vector<double> start, const std::vector<double> &step, int max_iters,
                              double tol);
}

#endif
