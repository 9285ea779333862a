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

#include "sinuous/medium.hpp"
#include "sinuous/error.hpp"

#include <cmath>

namespace sinuous
{
    Medium Medium::free_space()
    {
        return Medium(speed_of_light, 1.0);
    }

    Medium Medium::from_permittivity(double rel_permittivity)
    {
        detail::require(std::isfinite(rel_permittivity) && rel_permittivity >= 1.0,
                        "relative permittivity must be >= 1");
        return Medium(speed_of_light / std::sqrt(rel_permittivity), rel_permittivity);
    }

    Medium Medium::from_velocity(double velocity)
    {
        detail::require(std::isfinite(velocity) && velocity > 0.0 && velocity <= speed_of_light,
                        "wave velocity must lie in (0, c]");
        const double ratio = speed_of_light / velocity;
        return Medium(velocity, ratio * ratio);
    }
}
