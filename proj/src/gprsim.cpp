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

#include "sinuous/gprsim.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <cmath>

namespace sinuous
{
    void ScanConfig::validate() const
    {
        detail::require(!x_positions.empty(), "scan needs at least one position");
        for (std::size_t i = 1; i < x_positions.size(); ++i)
            detail::require(x_positions[i] > x_positions[i - 1], "scan positions must be strictly increasing");
        detail::require(antenna_height >= 0.0, "antenna height must be >= 0");
        detail::require(target_depth > 0.0, "target depth must be > 0");
        detail::require(std::isfinite(target_x), "target x must be finite");
        detail::require(std::isfinite(amplitude_exponent) && amplitude_exponent >= 0.0,
                        "amplitude exponent must be >= 0");
    }

    BScan::BScan(std::vector<double> x_positions, double t0, double dt, std::size_t n_time)
        : x_(std::move(x_positions)), t0_(t0), dt_(dt), n_time_(n_time), data_(x_.size() * n_time, 0.0)
    {
        detail::require(!x_.empty(), "B-scan needs at least one position");
        detail::require(dt > 0.0 && n_time >= 2, "B-scan needs dt > 0 and at least 2 time samples");
    }

    std::span<double> BScan::column(std::size_t i)
    {
        return {data_.data() + i * n_time_, n_time_};
    }

    std::span<const double> BScan::column(std::size_t i) const
    {
        return {data_.data() + i * n_time_, n_time_};
    }

    TimeSeries BScan::trace(std::size_t i) const
    {
        const auto c = column(i);
        return {t0_, dt_, std::vector<double>(c.begin(), c.end())};
    }

    double path_length(const ScanConfig &scan, double x)
    {
        return scan.antenna_height + std::hypot(scan.target_depth, x - scan.target_x);
    }

    double two_way_delay(const ScanConfig &scan, double x)
    {
        const double air = scan.antenna_height / scan.air.velocity();
        const double soil = std::hypot(scan.target_depth, x - scan.target_x) / scan.soil.velocity();
        return 2.0 * (air + soil);
    }

    namespace
    {
        double max_two_way_delay(const ScanConfig &scan)
        {
            double worst = 0.0;
            for (double x : scan.x_positions)
                worst = std::max(worst, two_way_delay(scan, x));
            return worst;
        }
    }

    RecordLayout plan_bscan_record(const ScanConfig &scan, const DispersionModel &model, const FrequencyGrid &band)
    {
        scan.validate();
        return plan_record(model, band, 2, max_two_way_delay(scan));
    }

    BScan synth_bscan(const ScanConfig &scan, const DispersionModel &model, const PulseSpec &pulse,
                      const FrequencyGrid &band, const RecordLayout &record)
    {
        scan.validate();
        model.validate();
        check_record_length(record.duration(), required_record_length(model, band, 2, max_two_way_delay(scan)));

        const auto excitation = differentiated_gaussian(pulse, record.t0, record.dt, record.n);
        const auto bins = record_bins(excitation);
        const auto in_band = band_bins(excitation, band);
        const std::size_t first_in_band = static_cast<std::size_t>(std::llround(in_band.f_start / bins.f_step));

        // Two-way antenna dispersion, shared by every column.
        std::vector<Complex> dispersion(bins.n, Complex(1.0, 0.0));
        for (std::size_t k = 0; k < in_band.n; ++k)
            dispersion[first_in_band + k] = std::polar(1.0, 2.0 * model.phase(in_band.frequency(k)));

        const double r_ref = path_length(scan, scan.target_x);
        BScan out(scan.x_positions, record.t0, record.dt, record.n);
        ComplexSpectrum channel{bins, std::vector<Complex>(bins.n)};
        for (std::size_t ix = 0; ix < scan.x_positions.size(); ++ix)
        {
            const double x = scan.x_positions[ix];
            const double amplitude = std::pow(r_ref / path_length(scan, x), scan.amplitude_exponent);
            const double delay = two_way_delay(scan, x);
            for (std::size_t k = 0; k < bins.n; ++k)
                channel.values[k] = amplitude * std::polar(1.0, -2.0 * pi * bins.frequency(k) * delay) * dispersion[k];
            const auto trace = synthesize(excitation, channel);
            std::copy(trace.samples.begin(), trace.samples.end(), out.column(ix).begin());
        }
        return out;
    }

    BScan compress_bscan(const BScan &bscan, const DispersionModel &model, const FrequencyGrid &band, int passes)
    {
        model.validate();
        BScan out(bscan.x_positions(), bscan.t0(), bscan.dt(), bscan.n_time());
        if (bscan.n_positions() == 0)
            return out;
        const auto bins = band_bins(bscan.trace(0), band);
        const auto correction = compress(ComplexSpectrum::ones(bins), model, passes);
        for (std::size_t ix = 0; ix < bscan.n_positions(); ++ix)
        {
            const auto trace = synthesize(bscan.trace(ix), correction);
            std::copy(trace.samples.begin(), trace.samples.end(), out.column(ix).begin());
        }
        return out;
    }

    std::vector<double> envelope_peak_times(const BScan &bscan)
    {
        std::vector<double> times(bscan.n_positions());
        for (std::size_t ix = 0; ix < bscan.n_positions(); ++ix)
        {
            const auto env = envelope(bscan.trace(ix));
            const auto it = std::max_element(env.samples.begin(), env.samples.end());
            times[ix] = env.time(static_cast<std::size_t>(it - env.samples.begin()));
        }
        return times;
    }

    BScanMetrics bscan_metrics(const BScan &bscan, const ScanConfig &scan)
    {
        scan.validate();
        detail::require(bscan.n_positions() == scan.x_positions.size(), "B-scan and scan config disagree on positions");

        double best = -1.0;
        BScanMetrics m{0.0, 0.0, 0.0, 0};
        for (std::size_t ix = 0; ix < bscan.n_positions(); ++ix)
        {
            const auto env = envelope(bscan.trace(ix));
            const auto it = std::max_element(env.samples.begin(), env.samples.end());
            if (*it > best)
            {
                best = *it;
                m.apex_column = ix;
                m.apex_x = bscan.x_positions()[ix];
                m.apex_time = env.time(static_cast<std::size_t>(it - env.samples.begin()));
            }
        }
        if (best <= 0.0)
            throw InvalidArgument("B-scan metrics are undefined for an all-zero scan");
        m.range_width_m6db = envelope_width(bscan.trace(m.apex_column));
        return m;
    }
}
