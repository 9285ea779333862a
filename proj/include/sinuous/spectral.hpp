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

#ifndef SINUOUS_SPECTRAL_HPP
#define SINUOUS_SPECTRAL_HPP

#include "sinuous/medium.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace sinuous
{
    using Complex = std::complex<double>;

    // Uniform frequency grid, sample k at f_start + k * f_step (Hz).
    struct FrequencyGrid
    {
        double f_start = 0.0;
        double f_step = 1.0;
        std::size_t n = 2;

        void validate() const;

        double frequency(std::size_t k) const { return f_start + static_cast<double>(k) * f_step; }
        double omega(std::size_t k) const { return 2.0 * pi * frequency(k); }
        double f_end() const { return frequency(n - 1); }

        // Index of the sample at f, if f lies on the grid within 1e-9 of a step.
        bool contains_sample(double f, std::size_t &index) const;

        bool operator==(const FrequencyGrid &) const = default;
    };

    // Complex samples on a FrequencyGrid. Units depend on what is stored:
    // V/m for fields, V for excitations, dimensionless for transfer functions.
    struct ComplexSpectrum
    {
        FrequencyGrid grid;
        std::vector<Complex> values;

        void validate() const;

        static ComplexSpectrum ones(const FrequencyGrid &grid);
    };

    struct PhaseCurve
    {
        FrequencyGrid grid;
        std::vector<double> phase; // rad
        bool wrapped = false;      // raw arg() values in (-pi, pi]

        void validate() const;
    };

    struct DelayCurve
    {
        FrequencyGrid grid;
        std::vector<double> delay; // s
    };

    // Maps any angle to (-pi, pi].
    double wrap_angle(double phase);

    PhaseCurve wrap(const PhaseCurve &curve);

    // Unwraps from the highest-frequency sample downward. The top sample is
    // kept as-is and every step between neighbours ends up within [-pi, pi].
    PhaseCurve unwrap_phase_from_top(const PhaseCurve &wrapped);

    struct BackPropagation
    {
        PhaseCurve phase;              // unwrapped, anchored at the top sample
        std::vector<std::size_t> gaps; // samples with |E| == 0, filled by interpolation
    };

    // Removes the propagation phase exp(-j k r_p) from a probed field and
    // returns what is left: arg[E exp(+j w r_p / v)], unwrapped from the top.
    // A 0 Hz sample is carried as phase 0 and never enters the unwrapping.
    BackPropagation backpropagate_phase(const ComplexSpectrum &field, double r_probe, const Medium &medium);

    // -dPhi/dw with second-order central differences inside and second-order
    // one-sided three-point stencils at both ends.
    DelayCurve group_delay(const PhaseCurve &phase);

    inline constexpr double default_eps_rel = 1e-4;

    // H = out * conj(in) / max(|in|^2, (eps_rel * max|in|)^2)
    ComplexSpectrum deconvolve(const ComplexSpectrum &output, const ComplexSpectrum &input,
                               double eps_rel = default_eps_rel);
}

#endif
