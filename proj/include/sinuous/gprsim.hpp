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

#ifndef SINUOUS_GPRSIM_HPP
#define SINUOUS_GPRSIM_HPP

#include "sinuous/dispersion.hpp"
#include "sinuous/medium.hpp"
#include "sinuous/pulsegen.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sinuous
{
    // Monostatic scan over a half-space with one buried point scatterer.
    //
    // The scene is a surrogate: straight rays without refraction (the whole
    // horizontal offset is charged to the soil leg), a constant soil velocity
    // and a frequency-flat unit reflector.
    struct ScanConfig
    {
        std::vector<double> x_positions; // m, strictly increasing
        double antenna_height = 0.025;   // m above ground
        double target_depth = 0.20;      // m below the surface
        double target_x = 0.0;           // m
        Medium soil = Medium::from_permittivity(2.5);
        Medium air = Medium::free_space();
        double amplitude_exponent = 2.0;

        void validate() const;
    };

    // n_time x n_positions traces, stored column by column.
    class BScan
    {
    public:
        BScan(std::vector<double> x_positions, double t0, double dt, std::size_t n_time);

        const std::vector<double> &x_positions() const { return x_; }
        double t0() const { return t0_; }
        double dt() const { return dt_; }
        std::size_t n_time() const { return n_time_; }
        std::size_t n_positions() const { return x_.size(); }

        std::span<double> column(std::size_t i);
        std::span<const double> column(std::size_t i) const;
        TimeSeries trace(std::size_t i) const;

        double at(std::size_t it, std::size_t ix) const { return data_[ix * n_time_ + it]; }

    private:
        std::vector<double> x_;
        double t0_;
        double dt_;
        std::size_t n_time_;
        std::vector<double> data_;
    };

    // One-way straight path length antenna -> target (m).
    double path_length(const ScanConfig &scan, double x);

    // 2 * (h / v_air + sqrt(d^2 + (x - x_t)^2) / v_soil)
    double two_way_delay(const ScanConfig &scan, double x);

    // Received traces V(w) A(x) exp(-j w t2(x)) exp(+j 2 Phi(w)). The model is
    // applied on the record bins inside `band`; the delay applies to every bin.
    BScan synth_bscan(const ScanConfig &scan, const DispersionModel &model, const PulseSpec &pulse,
                      const FrequencyGrid &band, const RecordLayout &record);

    // Multiplies every column by exp(-j passes Phi(w)) inside the band.
    BScan compress_bscan(const BScan &bscan, const DispersionModel &model, const FrequencyGrid &band,
                         int passes = 2);

    // Record long enough for the farthest position with two-way dispersion.
    RecordLayout plan_bscan_record(const ScanConfig &scan, const DispersionModel &model, const FrequencyGrid &band);

    struct BScanMetrics
    {
        double apex_x;           // m
        double apex_time;        // s, envelope maximum
        double range_width_m6db; // s, -6 dB envelope width of the apex column
        std::size_t apex_column;
    };

    BScanMetrics bscan_metrics(const BScan &bscan, const ScanConfig &scan);

    // Time of the envelope maximum of every column.
    std::vector<double> envelope_peak_times(const BScan &bscan);
}

#endif
