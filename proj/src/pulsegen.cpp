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

#include "sinuous/pulsegen.hpp"
#include "sinuous/error.hpp"
#include "sinuous/fft.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sinuous
{
    namespace
    {
        constexpr double bin_tol = 1e-9;

        bool near_integer(double v, double &rounded)
        {
            rounded = std::round(v);
            return std::abs(v - rounded) <= bin_tol * std::max(1.0, std::abs(v));
        }

        std::vector<Complex> to_complex(const std::vector<double> &x)
        {
            return {x.begin(), x.end()};
        }

        std::vector<Complex> spectrum_of(const TimeSeries &ts)
        {
            auto data = to_complex(ts.samples);
            FftPlan plan(data.size());
            plan.forward(data);
            return data;
        }

        // Where each record bin sits on a transfer grid.
        struct BinLayout
        {
            std::size_t first_bin; // record bin of grid sample 0
            std::size_t stride;    // record bins per grid step
        };

        BinLayout layout_on_record(const FrequencyGrid &grid, std::size_t n_time, double dt)
        {
            grid.validate();
            const double df = 1.0 / (static_cast<double>(n_time) * dt);
            double first = 0.0, stride = 0.0;
            if (!near_integer(grid.f_start / df, first) || !near_integer(grid.f_step / df, stride) || stride < 1.0)
            {
                std::ostringstream msg;
                msg.precision(17);
                msg << "frequency grid is incompatible with the record: f_start and f_step must be integer "
                       "multiples of the bin width 1/(N dt) = "
                    << df << " Hz (got f_start = " << grid.f_start << ", f_step = " << grid.f_step << ")";
                throw InvalidArgument(msg.str());
            }
            const double nyquist = 0.5 / dt;
            if (grid.f_end() > nyquist * (1.0 + bin_tol))
            {
                std::ostringstream msg;
                msg.precision(17);
                msg << "frequency grid ends at " << grid.f_end() << " Hz, above the record's Nyquist frequency "
                    << nyquist << " Hz";
                throw InvalidArgument(msg.str());
            }
            return {static_cast<std::size_t>(first), static_cast<std::size_t>(stride)};
        }

        // H on record bin `bin`, or nullopt when the bin is outside the grid.
        std::optional<Complex> transfer_at(const ComplexSpectrum &h, const BinLayout &layout, std::size_t bin)
        {
            if (bin < layout.first_bin)
                return std::nullopt;
            const std::size_t offset = bin - layout.first_bin;
            const std::size_t k = offset / layout.stride;
            const std::size_t rem = offset % layout.stride;
            if (k >= h.grid.n || (k == h.grid.n - 1 && rem != 0))
                return std::nullopt;
            if (rem == 0)
                return h.values[k];
            const Complex a = h.values[k], b = h.values[k + 1];
            const double u = static_cast<double>(rem) / static_cast<double>(layout.stride);
            const double mag = (1.0 - u) * std::abs(a) + u * std::abs(b);
            const double step = (std::abs(a) > 0.0 && std::abs(b) > 0.0) ? std::arg(b / a) : 0.0;
            return std::polar(mag, std::arg(a) + u * step);
        }

        // Inverse transform of a one-sided spectrum made Hermitian.
        Synthesis invert_hermitian(std::vector<Complex> spec, double t0, double dt)
        {
            const std::size_t n = spec.size();
            spec[0] = Complex(spec[0].real(), 0.0);
            if (n % 2 == 0)
                spec[n / 2] = Complex(spec[n / 2].real(), 0.0);
            for (std::size_t k = 1; k < (n + 1) / 2; ++k)
                spec[n - k] = std::conj(spec[k]);

            FftPlan plan(n);
            plan.inverse(spec);

            TimeSeries out{t0, dt, std::vector<double>(n)};
            double max_re = 0.0, max_im = 0.0;
            for (std::size_t i = 0; i < n; ++i)
            {
                const Complex v = spec[i] / static_cast<double>(n);
                out.samples[i] = v.real();
                max_re = std::max(max_re, std::abs(v.real()));
                max_im = std::max(max_im, std::abs(v.imag()));
            }
            for (double v : out.samples)
                if (!std::isfinite(v))
                    throw NumericError("synthesis produced non-finite samples");
            return {std::move(out), max_re > 0.0 ? max_im / max_re : max_im};
        }

        void require_same_dt(const TimeSeries &a, const TimeSeries &b)
        {
            detail::require(std::abs(a.dt - b.dt) <= 1e-12 * std::max(a.dt, b.dt), "time series sample steps differ");
        }
    }

    PulseSpec::PulseSpec(double v_peak, double mu, double f_bw)
        : v_peak_(v_peak), mu_(mu), f_bw_(f_bw), sigma_(fwhm_factor / (2.0 * pi * f_bw))
    {
        detail::require(std::isfinite(v_peak) && v_peak > 0.0, "v_peak must be > 0");
        detail::require(std::isfinite(mu), "mu must be finite");
        detail::require(std::isfinite(f_bw) && f_bw > 0.0, "pulse bandwidth must be > 0");
    }

    double PulseSpec::evaluate(double t) const
    {
        const double u = (t - mu_) / sigma_;
        return -v_peak_ * u * std::exp(0.5 - 0.5 * u * u);
    }

    void TimeSeries::validate() const
    {
        detail::require(std::isfinite(dt) && dt > 0.0, "time step must be > 0");
        detail::require(samples.size() >= 2, "time series needs at least 2 samples");
        for (double v : samples)
            detail::require(std::isfinite(v), "time series contains non-finite samples");
    }

    double TimeSeries::energy() const
    {
        double e = 0.0;
        for (double v : samples)
            e += v * v;
        return e * dt;
    }

    TimeSeries differentiated_gaussian(const PulseSpec &spec, double t0, double dt, std::size_t n)
    {
        detail::require(n >= 2, "pulse record needs at least 2 samples");
        detail::require(dt > 0.0, "time step must be > 0");
        TimeSeries ts{t0, dt, std::vector<double>(n)};
        for (std::size_t k = 0; k < n; ++k)
            ts.samples[k] = spec.evaluate(ts.time(k));
        return ts;
    }

    double spectral_peak_frequency(const PulseSpec &spec)
    {
        return 1.0 / (2.0 * pi * spec.sigma());
    }

    FrequencyGrid record_bins(const TimeSeries &ts)
    {
        ts.validate();
        const double df = 1.0 / (static_cast<double>(ts.size()) * ts.dt);
        return {0.0, df, ts.size() / 2 + 1};
    }

    FrequencyGrid band_bins(const TimeSeries &ts, const FrequencyGrid &band)
    {
        ts.validate();
        band.validate();
        const double df = 1.0 / (static_cast<double>(ts.size()) * ts.dt);
        const std::size_t top = ts.size() / 2;
        const double lo = std::ceil(band.f_start / df - bin_tol);
        const double hi = std::floor(band.f_end() / df + bin_tol);
        const std::size_t first = std::max<std::size_t>(1, static_cast<std::size_t>(std::max(lo, 0.0)));
        const std::size_t last = std::min(top, static_cast<std::size_t>(std::max(hi, 0.0)));
        if (last < first + 1)
            throw InvalidArgument("band covers fewer than 2 record bins");
        return {static_cast<double>(first) * df, df, last - first + 1};
    }

    ComplexSpectrum forward_spectrum(const TimeSeries &ts, const FrequencyGrid &grid)
    {
        ts.validate();
        const auto layout = layout_on_record(grid, ts.size(), ts.dt);
        const auto full = spectrum_of(ts);
        ComplexSpectrum out{grid, std::vector<Complex>(grid.n)};
        for (std::size_t k = 0; k < grid.n; ++k)
        {
            const std::size_t bin = layout.first_bin + k * layout.stride;
            const double f = grid.frequency(k);
            out.values[k] = full[bin] * ts.dt * std::polar(1.0, -2.0 * pi * f * ts.t0);
        }
        return out;
    }

    Synthesis synthesize_detailed(const TimeSeries &excitation, const ComplexSpectrum &transfer)
    {
        excitation.validate();
        transfer.validate();
        const std::size_t n = excitation.size();
        const auto layout = layout_on_record(transfer.grid, n, excitation.dt);

        auto spec = spectrum_of(excitation);
        for (std::size_t k = 0; k <= n / 2; ++k)
            if (auto h = transfer_at(transfer, layout, k))
                spec[k] *= *h;
        return invert_hermitian(std::move(spec), excitation.t0, excitation.dt);
    }

    TimeSeries synthesize(const TimeSeries &excitation, const ComplexSpectrum &transfer)
    {
        return synthesize_detailed(excitation, transfer).series;
    }

    TimeSeries envelope(const TimeSeries &ts)
    {
        ts.validate();
        detail::require(ts.size() >= 4, "envelope needs at least 4 samples");
        const std::size_t n = ts.size();
        auto spec = spectrum_of(ts);
        for (std::size_t k = 1; k < n; ++k)
        {
            if (2 * k < n)
                spec[k] *= 2.0;
            else if (2 * k > n)
                spec[k] = 0.0;
        }
        FftPlan plan(n);
        plan.inverse(spec);
        TimeSeries env{ts.t0, ts.dt, std::vector<double>(n)};
        for (std::size_t i = 0; i < n; ++i)
            env.samples[i] = std::abs(spec[i]) / static_cast<double>(n);
        return env;
    }

    double envelope_width(const TimeSeries &ts)
    {
        const auto env = envelope(ts);
        const auto &e = env.samples;
        const double peak = *std::max_element(e.begin(), e.end());
        if (peak <= 0.0)
            throw InvalidArgument("envelope width of an all-zero signal is undefined");
        const double level = 0.5 * peak;

        double width = 0.0;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
        {
            const double a = e[i] - level, b = e[i + 1] - level;
            if (a >= 0.0 && b >= 0.0)
                width += 1.0;
            else if (a >= 0.0 || b >= 0.0)
                width += std::max(a, b) / std::abs(a - b);
        }
        return width * ts.dt;
    }

    double fidelity(const TimeSeries &ts, const TimeSeries &reference)
    {
        ts.validate();
        reference.validate();
        require_same_dt(ts, reference);

        const std::size_t n = std::max(ts.size(), reference.size());
        std::vector<Complex> a(n), b(n);
        std::copy(ts.samples.begin(), ts.samples.end(), a.begin());
        std::copy(reference.samples.begin(), reference.samples.end(), b.begin());

        double ea = 0.0, eb = 0.0;
        for (double v : ts.samples)
            ea += v * v;
        for (double v : reference.samples)
            eb += v * v;
        if (ea == 0.0 || eb == 0.0)
            throw InvalidArgument("fidelity is undefined for an all-zero signal");

        FftPlan plan(n);
        plan.forward(a);
        plan.forward(b);
        for (std::size_t k = 0; k < n; ++k)
            a[k] *= std::conj(b[k]);
        plan.inverse(a);

        double best = 0.0;
        for (const auto &c : a)
            if (std::abs(c.real()) > std::abs(best))
                best = c.real();
        const double rho = best / (static_cast<double>(n) * std::sqrt(ea * eb));
        return std::clamp(rho, -1.0, 1.0);
    }

    PulseMetrics pulse_metrics(const TimeSeries &ts, const TimeSeries &reference)
    {
        ts.validate();
        require_same_dt(ts, reference);
        double peak = 0.0;
        for (double v : ts.samples)
            peak = std::max(peak, std::abs(v));
        if (peak == 0.0)
            throw InvalidArgument("pulse metrics are undefined for an all-zero signal");
        return {peak, envelope_width(ts), fidelity(ts, reference)};
    }

    double out_of_band_energy_fraction(const TimeSeries &ts, const FrequencyGrid &band)
    {
        ts.validate();
        band.validate();
        const std::size_t n = ts.size();
        const double df = 1.0 / (static_cast<double>(n) * ts.dt);
        const auto spec = spectrum_of(ts);
        double total = 0.0, outside = 0.0;
        for (std::size_t k = 0; k <= n / 2; ++k)
        {
            const double weight = (k == 0 || 2 * k == n) ? 1.0 : 2.0;
            const double e = weight * std::norm(spec[k]);
            const double f = static_cast<double>(k) * df;
            total += e;
            if (f < band.f_start * (1.0 - bin_tol) || f > band.f_end() * (1.0 + bin_tol))
                outside += e;
        }
        return total > 0.0 ? outside / total : 0.0;
    }

    double required_record_length(const DispersionModel &model, const FrequencyGrid &band, int passes,
                                  double extra_delay)
    {
        detail::require(passes >= 1, "passes must be >= 1");
        detail::require(extra_delay >= 0.0, "extra delay must be >= 0");
        return record_delay_factor * (passes * max_group_delay(model, band) + extra_delay);
    }

    void check_record_length(double duration, double required)
    {
        if (duration < required)
        {
            std::ostringstream msg;
            msg.precision(6);
            msg << "time record too short: " << duration << " s given, at least " << required
                << " s required (" << record_delay_factor << "x the largest channel delay)";
            throw InvalidArgument(msg.str());
        }
    }

    RecordLayout plan_record(const DispersionModel &model, const FrequencyGrid &band, int passes, double extra_delay)
    {
        band.validate();
        double ratio = 0.0;
        if (!near_integer(band.f_start / band.f_step, ratio))
            throw InvalidArgument("cannot plan a record: band f_start must be an integer multiple of f_step; "
                                  "give pulse.dt_s and pulse.n explicitly");

        const double required = required_record_length(model, band, passes, extra_delay);
        const double bins_per_step = std::max(1.0, std::ceil(required * band.f_step - bin_tol));
        const double duration = bins_per_step / band.f_step;

        auto n = static_cast<std::size_t>(std::ceil(duration * 4.0 * band.f_end() - bin_tol));
        n += n % 2;
        RecordLayout rec;
        rec.n = std::max<std::size_t>(n, 4);
        rec.dt = duration / static_cast<double>(rec.n);
        rec.t0 = 0.0;
        rec.mu = mu_record_fraction * duration;
        return rec;
    }

    double peak_aligned_mu(const RecordLayout &record, double sigma)
    {
        const double k = std::round((record.mu - sigma - record.t0) / record.dt);
        return record.t0 + k * record.dt + sigma;
    }

    PulsePipeline run_pulse_pipeline(const PulseSpec &pulse, const DispersionModel &model,
                                     const DispersionModel &compression_model, const FrequencyGrid &band,
                                     const RecordLayout &record, int passes)
    {
        check_record_length(record.duration(), required_record_length(model, band, passes));

        PulsePipeline out;
        out.input = differentiated_gaussian(pulse, record.t0, record.dt, record.n);
        const auto bins = band_bins(out.input, band);
        out.dispersed = synthesize(out.input, apply_dispersion(ComplexSpectrum::ones(bins), model, passes));
        out.compressed =
            synthesize(out.dispersed, compress(ComplexSpectrum::ones(bins), compression_model, passes));
        return out;
    }
}
