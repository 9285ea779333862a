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

#include "sinuous/spectral.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <cmath>

namespace sinuous
{
    void FrequencyGrid::validate() const
    {
        detail::require(std::isfinite(f_start) && f_start >= 0.0, "grid f_start must be >= 0");
        detail::require(std::isfinite(f_step) && f_step > 0.0, "grid f_step must be > 0");
        detail::require(n >= 2, "grid needs at least 2 samples");
    }

    bool FrequencyGrid::contains_sample(double f, std::size_t &index) const
    {
        const double k = (f - f_start) / f_step;
        const double k_round = std::round(k);
        if (k_round < 0.0 || k_round > static_cast<double>(n - 1) || std::abs(k - k_round) > 1e-9)
            return false;
        index = static_cast<std::size_t>(k_round);
        return true;
    }

    void ComplexSpectrum::validate() const
    {
        grid.validate();
        detail::require(values.size() == grid.n, "spectrum length does not match its grid");
        for (const auto &v : values)
            detail::require(std::isfinite(v.real()) && std::isfinite(v.imag()), "spectrum contains non-finite values");
    }

    ComplexSpectrum ComplexSpectrum::ones(const FrequencyGrid &grid)
    {
        grid.validate();
        return {grid, std::vector<Complex>(grid.n, Complex(1.0, 0.0))};
    }

    void PhaseCurve::validate() const
    {
        grid.validate();
        detail::require(phase.size() == grid.n, "phase curve length does not match its grid");
        for (double p : phase)
            detail::require(std::isfinite(p), "phase curve contains non-finite values");
    }

    double wrap_angle(double phase)
    {
        double w = std::remainder(phase, 2.0 * pi); // [-pi, pi]
        if (w <= -pi)
            w += 2.0 * pi;
        return w;
    }

    PhaseCurve wrap(const PhaseCurve &curve)
    {
        PhaseCurve out = curve;
        for (auto &p : out.phase)
            p = wrap_angle(p);
        out.wrapped = true;
        return out;
    }

    PhaseCurve unwrap_phase_from_top(const PhaseCurve &wrapped)
    {
        wrapped.validate();
        PhaseCurve out = wrapped;
        out.wrapped = false;
        auto &ph = out.phase;
        for (std::size_t k = ph.size() - 1; k-- > 0;)
        {
            const double turns = std::round((ph[k + 1] - ph[k]) / (2.0 * pi));
            ph[k] += 2.0 * pi * turns;
        }
        return out;
    }

    BackPropagation backpropagate_phase(const ComplexSpectrum &field, double r_probe, const Medium &medium)
    {
        field.validate();
        detail::require(r_probe >= 0.0, "probe distance must be >= 0");

        const std::size_t n = field.grid.n;
        std::vector<double> raw(n, 0.0);
        std::vector<bool> defined(n, false);
        std::vector<std::size_t> gaps;

        for (std::size_t k = 0; k < n; ++k)
        {
            const double f = field.grid.frequency(k);
            if (f <= 0.0)
                continue; // DC: carried as phase 0
            const Complex e = field.values[k];
            if (std::abs(e) == 0.0)
            {
                gaps.push_back(k);
                continue;
            }
            const double k_r = 2.0 * pi * f * r_probe / medium.velocity();
            raw[k] = std::arg(e * std::polar(1.0, k_r));
            defined[k] = true;
        }

        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < n; ++k)
            if (defined[k])
                idx.push_back(k);
        if (idx.empty())
            throw NumericError("back-propagation: field has no nonzero samples");

        // Unwrap the defined samples from the top; gaps do not take part.
        for (std::size_t j = idx.size() - 1; j-- > 0;)
        {
            const double turns = std::round((raw[idx[j + 1]] - raw[idx[j]]) / (2.0 * pi));
            raw[idx[j]] += 2.0 * pi * turns;
        }

        // Fill gaps by linear interpolation between defined neighbours,
        // constant extrapolation past the ends.
        for (std::size_t g : gaps)
        {
            auto above = std::upper_bound(idx.begin(), idx.end(), g);
            if (above == idx.begin())
                raw[g] = raw[*above];
            else if (above == idx.end())
                raw[g] = raw[idx.back()];
            else
            {
                const std::size_t lo = *(above - 1), hi = *above;
                const double w = static_cast<double>(g - lo) / static_cast<double>(hi - lo);
                raw[g] = raw[lo] + w * (raw[hi] - raw[lo]);
            }
        }

        return {PhaseCurve{field.grid, std::move(raw), false}, std::move(gaps)};
    }

    DelayCurve group_delay(const PhaseCurve &phase)
    {
        phase.validate();
        detail::require(!phase.wrapped, "group delay needs an unwrapped phase curve");
        detail::require(phase.grid.n >= 3, "group delay needs at least 3 samples");

        const auto &p = phase.phase;
        const std::size_t n = p.size();
        const double two_h = 2.0 * (2.0 * pi * phase.grid.f_step);

        std::vector<double> d(n);
        d[0] = -(-3.0 * p[0] + 4.0 * p[1] - p[2]) / two_h;
        for (std::size_t k = 1; k + 1 < n; ++k)
            d[k] = -(p[k + 1] - p[k - 1]) / two_h;
        d[n - 1] = -(3.0 * p[n - 1] - 4.0 * p[n - 2] + p[n - 3]) / two_h;
        return {phase.grid, std::move(d)};
    }

    ComplexSpectrum deconvolve(const ComplexSpectrum &output, const ComplexSpectrum &input, double eps_rel)
    {
        output.validate();
        input.validate();
        if (!(output.grid == input.grid))
            throw InvalidArgument("deconvolve: output and input spectra are on different grids");
        detail::require(eps_rel >= 0.0 && eps_rel < 1.0, "eps_rel must lie in [0, 1)");

        double peak = 0.0;
        for (const auto &v : input.values)
            peak = std::max(peak, std::abs(v));
        if (peak == 0.0)
            throw InvalidArgument("deconvolve: input spectrum is identically zero");

        const double floor = (eps_rel * peak) * (eps_rel * peak);
        ComplexSpectrum h{output.grid, std::vector<Complex>(output.grid.n)};
        for (std::size_t k = 0; k < h.values.size(); ++k)
        {
            const double power = std::norm(input.values[k]);
            const double denom = std::max(power, floor);
            h.values[k] = denom > 0.0 ? output.values[k] * std::conj(input.values[k]) / denom : Complex(0.0, 0.0);
        }
        return h;
    }
}
