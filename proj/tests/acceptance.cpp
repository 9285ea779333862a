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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "sinuous/dispersion.hpp"
#include "sinuous/fitting.hpp"
#include "sinuous/geometry.hpp"
#include "sinuous/gprsim.hpp"
#include "sinuous/pulsegen.hpp"
#include "sinuous/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace sinuous;

namespace
{
    struct Outcome
    {
        bool pass;
        std::string detail;
    };

    int failures = 0;

    // Runs one criterion; a runtime budget of 0 means "instant", not timed.
    void criterion(int id, const char *title, double budget_s, const std::function<Outcome()> &body)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out{false, ""};
        try
        {
            out = body();
        }
        catch (const std::exception &e)
        {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_s > 0.0 && elapsed >= budget_s)
        {
            out.pass = false;
            out.detail += "; over the runtime budget";
        }
        if (!out.pass)
            ++failures;
        std::printf("%s  %2d  %-34s %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(),
                    elapsed);
        std::fflush(stdout);
    }

    std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0, double d = 0.0)
    {
        char buf[256];
        std::snprintf(buf, sizeof buf, f, a, b, c, d);
        return buf;
    }
}

int main()
{
    criterion(1, "default model phi0", 0.0, [] {
        const double phi0 = default_model(0.8547, 10e9).phi0;
        return Outcome{std::abs(phi0 - 20.01) <= 0.005, fmt("phi0 = %.6f rad (target 20.01 +- 0.005)", phi0)};
    });

    criterion(2, "log-periodic phase step", 0.0, [] {
        const auto model = default_model(0.8547, 10e9);
        std::mt19937_64 rng(20260101);
        std::uniform_real_distribution<double> f_dist(0.8e9, 10e9);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const double f = f_dist(rng);
            worst = std::max(worst, std::abs(model.phase(0.8547 * f) - model.phase(f) - pi));
        }
        return Outcome{worst < 1e-9, fmt("max |Phi(tau w) - Phi(w) - pi| = %.3e rad over 100 draws", worst)};
    });

    criterion(3, "spectral peak of the 6 GHz pulse", 0.0, [] {
        const double f = spectral_peak_frequency(PulseSpec(1.0, 0.0, 6e9));
        const double rel = std::abs(f - 2.5e9) / 2.5e9;
        const bool value_ok = std::abs(f - 2.548e9) < 0.5e6;
        return Outcome{value_ok && rel < 0.02,
                       fmt("f_peak = %.4f GHz (expect 2.548), %.2f%% from 2.5 GHz", f / 1e9, 100.0 * rel)};
    });

    criterion(4, "lowest operating frequency", 0.0, [] {
        const double f_l = lowest_operating_frequency(SinuousParams{}, Medium::free_space());
        const bool value_ok = std::abs(f_l - 636.6e6) <= 0.1e6;
        return Outcome{value_ok && f_l < 800e6,
                       fmt("f_L = %.3f MHz (target 636.6 +- 0.1); below 800 MHz: ", f_l / 1e6) +
                           (f_l < 800e6 ? "yes" : "no")};
    });

    criterion(5, "round-trip compression", 5.0, [] {
        const auto model = default_model(0.8547, 10e9);
        const FrequencyGrid band{0.05e9, 10e6, 1196}; // 0.05 .. 12 GHz
        const auto rec = plan_record(model, band, 1);
        const PulseSpec pulse(1.0, peak_aligned_mu(rec, PulseSpec(1.0, 0.0, 6e9).sigma()), 6e9);
        const auto run = run_pulse_pipeline(pulse, model, model, band, rec);
        const double fid_c = fidelity(run.compressed, run.input);
        const double fid_d = fidelity(run.dispersed, run.input);
        const double factor = envelope_width(run.dispersed) / envelope_width(run.input);
        return Outcome{fid_c >= 0.999 && fid_d < fid_c && factor > 3.0,
                       fmt("fidelity compressed %.6f, dispersed %.4f; dispersed -6 dB width %.2fx input", fid_c,
                           fid_d, factor)};
    });

    criterion(6, "capped-model fit recovery", 30.0, [] {
        const auto truth = with_cap(DispersionModel{18.39, 10.8e9, std::nullopt, std::nullopt}, 0.8e9, 3.69e-9);
        const FrequencyGrid grid{0.1e9, 1e6, 9901};
        const auto clean = model_phase(truth, grid);
        bool ok = true;
        std::string detail;
        for (std::uint64_t seed : {1u, 2u, 3u})
        {
            PhaseCurve ref = clean;
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> noise(0.0, 0.05);
            for (auto &v : ref.phase)
                v += noise(rng);
            FitConfig cfg;
            cfg.band = {grid.f_start, grid.f_end()};
            cfg.init = DispersionModel{15.0, 8e9, std::nullopt, std::nullopt};
            cfg.fit_cap = true;
            cfg.seed = seed;
            const auto res = fit_with_cap(ref, cfg);
            const double e_phi = std::abs(res.model.phi0 / 18.39 - 1.0);
            const double e_tau = std::abs(*res.model.tau_c / 3.69e-9 - 1.0);
            const double e_flow = std::abs(*res.model.f_low / 0.8e9 - 1.0);
            ok = ok && e_phi < 0.01 && e_tau < 0.01 && e_flow < 0.05;
            detail += fmt("seed %.0f: phi0 %.3f%% tau_c %.3f%% f_low %.3f%%; ", static_cast<double>(seed),
                          100.0 * e_phi, 100.0 * e_tau, 100.0 * e_flow);
        }
        return Outcome{ok, detail};
    });

    criterion(7, "group-delay convergence", 0.0, [] {
        const auto model = default_model(0.8547, 10e9);
        const double f = 1e9, exact = model.phi0 / (2.0 * pi * f);
        auto error_at = [&](double step) {
            const FrequencyGrid g{f - 10 * step, step, 21};
            return std::abs(group_delay(model_phase(model, g)).delay[10] - exact);
        };
        const double e1 = error_at(1e6), e2 = error_at(0.5e6);
        const bool ok = e1 / exact < 1e-3 && std::abs(exact - 3.185e-9) / 3.185e-9 < 1e-3 && e1 / e2 >= 3.5;
        return Outcome{ok, fmt("tau_g(1 GHz) = %.5f ns, rel error %.2e, halving ratio %.2f", (exact) * 1e9,
                               e1 / exact, e1 / e2)};
    });

    criterion(8, "wrap/unwrap round trip", 0.0, [] {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> step(-0.99 * pi, 0.99 * pi);
        std::uniform_real_distribution<double> start(-100.0, 100.0);
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial)
        {
            // random walk with a slowly varying slope; every step below pi
            PhaseCurve c{{1e8, 1e7, 500}, std::vector<double>(500), false};
            double phi = start(rng), slope = step(rng);
            for (auto &v : c.phase)
            {
                v = phi;
                slope = std::clamp(slope + 0.1 * step(rng), -0.99 * pi, 0.99 * pi);
                phi += slope;
            }
            const auto back = unwrap_phase_from_top(wrap(c));
            const double m = std::round((back.phase.back() - c.phase.back()) / (2.0 * pi));
            for (std::size_t k = 0; k < c.phase.size(); ++k)
                worst = std::max(worst, std::abs(back.phase[k] - c.phase[k] - 2.0 * pi * m));
        }
        return Outcome{worst <= 1e-9, fmt("max deviation after removing 2 pi m: %.3e rad over 50 curves", worst)};
    });

    criterion(9, "B-scan structure", 60.0, [] {
        ScanConfig scan;
        for (int i = -50; i <= 50; ++i)
            scan.x_positions.push_back(0.01 * i);
        const auto model = default_model(0.8547, 10e9);
        const FrequencyGrid band{0.8e9, 10e6, 921};
        const auto rec = plan_bscan_record(scan, model, band);
        const PulseSpec pulse(1.0, rec.mu, 6e9);
        const auto dispersed = synth_bscan(scan, model, pulse, band, rec);
        const auto compressed = compress_bscan(dispersed, model, band, 2);

        const auto peaks = envelope_peak_times(compressed);
        double worst = 0.0;
        for (std::size_t ix = 0; ix < peaks.size(); ++ix)
            worst = std::max(worst, std::abs(peaks[ix] - pulse.mu() - two_way_delay(scan, scan.x_positions[ix])));
        const auto mc = bscan_metrics(compressed, scan);
        const auto md = bscan_metrics(dispersed, scan);
        const double apex_delay = peaks[50] - pulse.mu(); // column at target_x
        const bool ok = worst <= rec.dt && std::abs(apex_delay - 2.276e-9) <= rec.dt &&
                        mc.range_width_m6db < md.range_width_m6db;
        return Outcome{ok, fmt("worst column offset %.2f dt; apex delay %.4f ns (dt %.1f ps); width %.3f", worst / rec.dt,
                               apex_delay * 1e9, rec.dt * 1e12, mc.range_width_m6db * 1e9) +
                               fmt(" ns compressed vs %.3f ns dispersed", md.range_width_m6db * 1e9)};
    });

    criterion(10, "all-pass energy conservation", 0.0, [] {
        const auto model = default_model(0.8547, 10e9);
        const FrequencyGrid band{0.8e9, 10e6, 921};
        const auto rec = plan_record(model, band, 1);
        const auto x = differentiated_gaussian(PulseSpec(1.0, rec.mu, 6e9), rec.t0, rec.dt, rec.n);
        const auto y = synthesize(x, apply_dispersion(ComplexSpectrum::ones(band_bins(x, band)), model, 1));
        const double rel = std::abs(y.energy() - x.energy()) / x.energy();
        return Outcome{rel < 1e-9, fmt("relative energy change %.3e", rel)};
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
