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

#ifndef SINUOUS_PULSEGEN_HPP
#define SINUOUS_PULSEGEN_HPP

#include "sinuous/dispersion.hpp"
#include "sinuous/spectral.hpp"

#include <cstddef>
#include <vector>

namespace sinuous
{
    // Differentiated Gaussian excitation
    //   v(t) = -v_peak (t - mu) / sigma * exp(0.5 - (t - mu)^2 / (2 sigma^2))
    // with sigma = 2.3548 / w_BW.
    class PulseSpec
    {
    public:
        PulseSpec(double v_peak, double mu, double f_bw);

        double v_peak() const { return v_peak_; }
        double mu() const { return mu_; }
        double f_bw() const { return f_bw_; }
        double sigma() const { return sigma_; }

        PulseSpec with_mu(double mu) const { return PulseSpec(v_peak_, mu, f_bw_); }

        double evaluate(double t) const;

    private:
        double v_peak_;
        double mu_;
        double f_bw_;
        double sigma_;
    };

    inline constexpr double fwhm_factor = 2.3548;

    // Uniformly sampled real signal, sample k at t0 + k * dt.
    struct TimeSeries
    {
        double t0 = 0.0;
        double dt = 1.0;
        std::vector<double> samples;

        void validate() const;

        std::size_t size() const { return samples.size(); }
        double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
        double duration() const { return static_cast<double>(samples.size()) * dt; }

        // sum |x|^2 dt
        double energy() const;
    };

    TimeSeries differentiated_gaussian(const PulseSpec &spec, double t0, double dt, std::size_t n);

    // Frequency of the magnitude-spectrum maximum, 1 / (2 pi sigma).
    double spectral_peak_frequency(const PulseSpec &spec);

    // All non-negative DFT bins of the record: 0, df, ..., floor(N/2) df.
    FrequencyGrid record_bins(const TimeSeries &ts);

    // The record's DFT bins that fall inside [band.f_start, band.f_end].
    // Useful for evaluating an analytic transfer function bin by bin.
    FrequencyGrid band_bins(const TimeSeries &ts, const FrequencyGrid &band);

    // Continuous-transform approximation X(f) = dt * sum x[n] exp(-j 2 pi f t_n)
    // evaluated at the grid frequencies, which must be record bins: f_start and
    // f_step integer multiples of 1/(N dt) and f_end at or below Nyquist.
    ComplexSpectrum forward_spectrum(const TimeSeries &ts, const FrequencyGrid &grid);

    struct Synthesis
    {
        TimeSeries series;
        double imag_residue; // max |Im| of the inverse transform relative to max |Re|
    };

    // Multiplies the excitation spectrum by H, keeps it Hermitian and
    // inverse-transforms. Bins outside the transfer grid pass through (H = 1).
    // When the grid step spans several record bins, H is interpolated linearly
    // in magnitude and along the shorter arc in phase.
    Synthesis synthesize_detailed(const TimeSeries &excitation, const ComplexSpectrum &transfer);
    TimeSeries synthesize(const TimeSeries &excitation, const ComplexSpectrum &transfer);

    // |analytic signal|
    TimeSeries envelope(const TimeSeries &ts);

    // Total time the envelope spends at or above half its maximum (-6 dB),
    // with crossings located by linear interpolation.
    double envelope_width(const TimeSeries &ts);

    // Normalized circular cross-correlation taken at the lag of largest
    // magnitude; sign is kept, so fidelity(x, -x) == -1.
    double fidelity(const TimeSeries &ts, const TimeSeries &reference);

    struct PulseMetrics
    {
        double peak;           // max |ts|
        double env_width_m6db; // s
        double fidelity;       // against the reference, in [-1, 1]
    };

    PulseMetrics pulse_metrics(const TimeSeries &ts, const TimeSeries &reference);

    // Fraction of the signal energy carried by bins outside the band.
    double out_of_band_energy_fraction(const TimeSeries &ts, const FrequencyGrid &band);

    // Record planning: the record must span at least record_delay_factor times
    // the largest delay the channel can impose, and the pulse sits at
    // mu_record_fraction of the record.
    inline constexpr double record_delay_factor = 8.0;
    inline constexpr double mu_record_fraction = 0.25;

    double required_record_length(const DispersionModel &model, const FrequencyGrid &band, int passes,
                                  double extra_delay = 0.0);

    // Throws InvalidArgument stating the required length when duration is short.
    void check_record_length(double duration, double required);

    struct RecordLayout
    {
        double t0 = 0.0;
        double dt = 1.0;
        std::size_t n = 2;
        double mu = 0.0;

        double duration() const { return static_cast<double>(n) * dt; }
    };

    // Chooses a record whose bin width divides band.f_step (band.f_start must
    // be a multiple of band.f_step), whose Nyquist frequency is at least twice
    // band.f_end and whose length satisfies required_record_length.
    RecordLayout plan_record(const DispersionModel &model, const FrequencyGrid &band, int passes,
                             double extra_delay = 0.0);

    // Pulse centre near record.mu, shifted so that mu - sigma falls on a sample
    // and the sampled pulse reaches exactly v_peak.
    double peak_aligned_mu(const RecordLayout &record, double sigma);

    struct PulsePipeline
    {
        TimeSeries input;
        TimeSeries dispersed;
        TimeSeries compressed;
    };

    // Input pulse, its model-dispersed version and the compression of the
    // latter with `compression_model`, all on the given record. The model is
    // evaluated on every record bin inside the band.
    PulsePipeline run_pulse_pipeline(const PulseSpec &pulse, const DispersionModel &model,
                                     const DispersionModel &compression_model, const FrequencyGrid &band,
                                     const RecordLayout &record, int passes = 1);
}

#endif
