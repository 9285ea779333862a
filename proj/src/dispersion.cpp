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

#include "sinuous/dispersion.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <cmath>

namespace sinuous
{
    void DispersionModel::validate() const
    {
        detail::require(std::isfinite(phi0) && phi0 > 0.0, "phi0 must be > 0");
        detail::require(std::isfinite(f0) && f0 > 0.0, "f0 must be > 0");
        if (f_low)
        {
            detail::require(*f_low > 0.0 && *f_low < f0, "cap cutoff must satisfy 0 < f_low < f0");
            detail::require(tau_c.has_value() && *tau_c > 0.0, "a capped model needs tau_c > 0");
        }
        else
            detail::require(!tau_c.has_value(), "tau_c given without a cap cutoff f_low");
    }

    double DispersionModel::phase(double f) const
    {
        detail::require(f > 0.0, "model phase is undefined at f <= 0");
        if (f_low && f < *f_low)
        {
            const double at_cap = -phi0 * std::log(*f_low / f0);
            return at_cap + *tau_c * 2.0 * pi * (*f_low - f);
        }
        return -phi0 * std::log(f / f0);
    }

    double DispersionModel::group_delay(double f) const
    {
        detail::require(f > 0.0, "model group delay is undefined at f <= 0");
        if (f_low && f < *f_low)
            return *tau_c;
        return phi0 / (2.0 * pi * f);
    }

    DispersionModel default_model(double tau, double f0)
    {
        if (!(tau > 0.0 && tau < 1.0))
            throw InvalidArgument("default_model: tau must lie in (0, 1)");
        DispersionModel m;
        m.phi0 = -pi / std::log(tau);
        m.f0 = f0;
        m.validate();
        return m;
    }

    DispersionModel with_cap(DispersionModel model, double f_low, std::optional<double> tau_c)
    {
        model.f_low = f_low;
        model.tau_c = tau_c ? *tau_c : model.phi0 / (2.0 * pi * f_low);
        model.validate();
        return model;
    }

    namespace
    {
        void require_positive(const FrequencyGrid &grid)
        {
            grid.validate();
            if (grid.f_start <= 0.0)
                throw InvalidArgument("dispersion model is undefined at 0 Hz; the grid must start above 0");
        }

        ComplexSpectrum rotate_phase(const ComplexSpectrum &spectrum, const DispersionModel &model, double factor)
        {
            spectrum.validate();
            model.validate();
            require_positive(spectrum.grid);
            ComplexSpectrum out = spectrum;
            for (std::size_t k = 0; k < out.values.size(); ++k)
                out.values[k] *= std::polar(1.0, factor * model.phase(out.grid.frequency(k)));
            return out;
        }
    }

    PhaseCurve model_phase(const DispersionModel &model, const FrequencyGrid &grid)
    {
        model.validate();
        require_positive(grid);
        PhaseCurve curve{grid, std::vector<double>(grid.n), false};
        for (std::size_t k = 0; k < grid.n; ++k)
            curve.phase[k] = model.phase(grid.frequency(k));
        return curve;
    }

    DelayCurve model_group_delay(const DispersionModel &model, const FrequencyGrid &grid)
    {
        model.validate();
        require_positive(grid);
        DelayCurve curve{grid, std::vector<double>(grid.n)};
        for (std::size_t k = 0; k < grid.n; ++k)
            curve.delay[k] = model.group_delay(grid.frequency(k));
        return curve;
    }

    double max_group_delay(const DispersionModel &model, const FrequencyGrid &grid)
    {
        const auto gd = model_group_delay(model, grid);
        return *std::max_element(gd.delay.begin(), gd.delay.end());
    }

    ComplexSpectrum apply_dispersion(const ComplexSpectrum &spectrum, const DispersionModel &model, int passes)
    {
        detail::require(passes >= 1, "passes must be >= 1");
        return rotate_phase(spectrum, model, static_cast<double>(passes));
    }

    ComplexSpectrum compress(const ComplexSpectrum &spectrum, const DispersionModel &model, int passes)
    {
        detail::require(passes >= 1, "passes must be >= 1");
        return rotate_phase(spectrum, model, -static_cast<double>(passes));
    }
}
