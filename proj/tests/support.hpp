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

// Shared helpers and independent oracles for the unit tests.

#ifndef SINUOUS_TESTS_SUPPORT_HPP
#define SINUOUS_TESTS_SUPPORT_HPP

#include "sinuous/pulsegen.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace testing
{
    inline bool rel_close(double a, double b, double tol)
    {
        return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
    }

    // Seeded generator; every property test names its own seed.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
        double normal(double sigma) { return std::normal_distribution<double>(0.0, sigma)(engine_); }
        int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    private:
        std::mt19937_64 engine_;
    };

    // Direct O(N) evaluation of dt * sum x[n] exp(-j 2 pi f t_n); no FFT involved.
    inline std::complex<double> direct_transform(const sinuous::TimeSeries &ts, double f)
    {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < ts.size(); ++k)
            acc += ts.samples[k] * std::polar(1.0, -2.0 * sinuous::pi * f * ts.time(k));
        return acc * ts.dt;
    }

    // Circular shift by m samples (later in time for m > 0).
    inline sinuous::TimeSeries shifted(const sinuous::TimeSeries &ts, std::size_t m)
    {
        sinuous::TimeSeries out = ts;
        const std::size_t n = ts.size();
        for (std::size_t k = 0; k < n; ++k)
            out.samples[(k + m) % n] = ts.samples[k];
        return out;
    }

    inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b)
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[i]));
        return worst;
    }

    inline double max_abs(const std::vector<double> &a)
    {
        double worst = 0.0;
        for (double v : a)
            worst = std::max(worst, std::abs(v));
        return worst;
    }
}

#endif
