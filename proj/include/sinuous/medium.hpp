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

#ifndef SINUOUS_MEDIUM_HPP
#define SINUOUS_MEDIUM_HPP

#include <numbers>

namespace sinuous
{
    inline constexpr double speed_of_light = 299792458.0; // m/s
    inline constexpr double pi = std::numbers::pi;

    // Lossless, non-dispersive propagation medium. The velocity is always
    // c / sqrt(eps_r), so the two fields cannot drift apart.
    class Medium
    {
    public:
        static Medium free_space();
        static Medium from_permittivity(double rel_permittivity);
        static Medium from_velocity(double velocity); // requires velocity <= c

        double velocity() const { return velocity_; }
        double rel_permittivity() const { return rel_permittivity_; }

        double wavelength(double freq) const { return velocity_ / freq; }
        double wavenumber(double freq) const { return 2.0 * pi * freq / velocity_; }

    private:
        Medium(double velocity, double rel_permittivity)
            : velocity_(velocity), rel_permittivity_(rel_permittivity) {}

        double velocity_;
        double rel_permittivity_;
    };
}

#endif
