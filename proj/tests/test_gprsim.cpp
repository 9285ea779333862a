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

#include "sinuous/error.hpp"
#include "sinuous/gprsim.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace sinuous;

namespace
{
    const FrequencyGrid band{0.8e9, 10e6, 921};

    ScanConfig symmetric_scan(int half = 10, double step = 0.01)
    {
        ScanConfig scan;
        for (int i = -half; i <= half; ++i)
            scan.x_positions.push_back(i * step);
        return scan;
    }

    DispersionModel negligible()
    {
        return DispersionModel{1e-12, 10e9, std::nullopt, std::nullopt};
    }

    struct Scene
    {
        ScanConfig scan = symmetric_scan();
        DispersionModel model = default_model(0.8547, 10e9);
        RecordLayout record;
        PulseSpec pulse{1.0, 0.0, 6e9};

        Scene()
        {
            record = plan_bscan_record(scan, model, band);
            pulse = pulse.with_mu(record.mu);
        }
    };

    double column_energy(const BScan &b, std::size_t ix)
    {
        return b.trace(ix).energy();
    }
}

TEST_SUITE("gprsim")
{
    TEST_CASE("two-way delay")
    {
        ScanConfig scan = symmetric_scan();
        CHECK(two_way_delay(scan, 0.0) == doctest::Approx(2.276426620557866e-9).epsilon(1e-12));
        CHECK(two_way_delay(scan, 0.0) == doctest::Approx(2.276e-9).epsilon(1e-3));
        for (double x : scan.x_positions)
            CHECK(two_way_delay(scan, x) >= two_way_delay(scan, 0.0));
        CHECK(two_way_delay(scan, 0.05) == two_way_delay(scan, -0.05));

        scan.target_depth = 1e-15;
        CHECK(two_way_delay(scan, 0.0) == doctest::Approx(2.0 * 0.025 / speed_of_light).epsilon(1e-9));

        CHECK(path_length(symmetric_scan(), 0.0) == doctest::Approx(0.225));
    }

    TEST_CASE("scan validation")
    {
        ScanConfig s;
        CHECK_THROWS_AS(s.validate(), InvalidArgument);
        s.x_positions = {0.0, 0.0};
        CHECK_THROWS_AS(s.validate(), InvalidArgument);
        s.x_positions = {0.0};
        CHECK_NOTHROW(s.validate());
        s.target_depth = 0.0;
        CHECK_THROWS_AS(s.validate(), InvalidArgument);
    }

    TEST_CASE("delay-only channel reproduces the delayed pulse")
    {
        Scene sc;
        sc.model = negligible();
        const auto b = synth_bscan(sc.scan, sc.model, sc.pulse, band, sc.record);
        CHECK(b.n_positions() == 21);
        CHECK(b.n_time() == sc.record.n);
        const std::size_t centre = 10;
        const auto expected = differentiated_gaussian(sc.pulse.with_mu(sc.pulse.mu() + two_way_delay(sc.scan, 0.0)),
                                                      sc.record.t0, sc.record.dt, sc.record.n);
        CHECK(fidelity(b.trace(centre), expected) >= 0.999);
        CHECK(testing::max_abs_diff(b.trace(centre).samples, expected.samples) < 1e-6);

        // compressing with the same negligible model changes nothing
        const auto c = compress_bscan(b, sc.model, band);
        for (std::size_t ix = 0; ix < b.n_positions(); ++ix)
            CHECK(testing::max_abs_diff(c.trace(ix).samples, b.trace(ix).samples) < 1e-9);
    }

    TEST_CASE("envelope peaks trace the hyperbola")
    {
        Scene sc;
        const auto b = compress_bscan(synth_bscan(sc.scan, sc.model, sc.pulse, band, sc.record), sc.model, band);
        const auto peaks = envelope_peak_times(b);
        for (std::size_t ix = 0; ix < peaks.size(); ++ix)
            CHECK(std::abs(peaks[ix] - sc.pulse.mu() - two_way_delay(sc.scan, sc.scan.x_positions[ix])) <=
                  sc.record.dt);
    }

    TEST_CASE("dispersion widens, compression restores")
    {
        Scene sc;
        const auto dispersed = synth_bscan(sc.scan, sc.model, sc.pulse, band, sc.record);
        const auto reference = synth_bscan(sc.scan, negligible(), sc.pulse, band, sc.record);
        const auto compressed = compress_bscan(dispersed, sc.model, band);
        const std::size_t centre = 10;
        CHECK(envelope_width(dispersed.trace(centre)) > 3.0 * envelope_width(reference.trace(centre)));
        for (std::size_t ix = 0; ix < dispersed.n_positions(); ++ix)
            CHECK(fidelity(compressed.trace(ix), reference.trace(ix)) >= 0.99);

        // a second compression over-corrects
        const auto twice = compress_bscan(compressed, sc.model, band);
        CHECK(fidelity(twice.trace(centre), reference.trace(centre)) <
              fidelity(compressed.trace(centre), reference.trace(centre)));

        const auto dm = bscan_metrics(dispersed, sc.scan);
        const auto cm = bscan_metrics(compressed, sc.scan);
        CHECK(cm.range_width_m6db < dm.range_width_m6db);
        CHECK(std::abs(cm.apex_x - sc.scan.target_x) <= 0.01);
        CHECK(std::abs(cm.apex_time - sc.pulse.mu() - two_way_delay(sc.scan, 0.0)) <= sc.record.dt);
    }

    TEST_CASE("scene symmetry and spreading loss")
    {
        Scene sc;
        const auto b = synth_bscan(sc.scan, sc.model, sc.pulse, band, sc.record);
        const std::size_t n = b.n_positions();
        const double peak = testing::max_abs(b.trace(n / 2).samples);
        for (std::size_t ix = 0; ix < n / 2; ++ix)
            CHECK(testing::max_abs_diff(b.trace(ix).samples, b.trace(n - 1 - ix).samples) <= 1e-9 * peak);
        for (std::size_t ix = n / 2 + 1; ix < n; ++ix)
            CHECK(column_energy(b, ix) < column_energy(b, ix - 1));
    }

    TEST_CASE("traces are real")
    {
        Scene sc;
        const auto excitation = differentiated_gaussian(sc.pulse, sc.record.t0, sc.record.dt, sc.record.n);
        const auto bins = record_bins(excitation);
        ComplexSpectrum channel{bins, std::vector<Complex>(bins.n)};
        const double t2 = two_way_delay(sc.scan, 0.05);
        for (std::size_t k = 0; k < bins.n; ++k)
        {
            const double f = bins.frequency(k);
            const double disp = (f >= band.f_start && f <= band.f_end()) ? 2.0 * sc.model.phase(f) : 0.0;
            channel.values[k] = std::polar(0.5, -bins.omega(k) * t2 + disp);
        }
        CHECK(synthesize_detailed(excitation, channel).imag_residue <= 1e-12);
    }

    TEST_CASE("record length and degenerate scans")
    {
        Scene sc;
        RecordLayout tiny = sc.record;
        tiny.n /= 8;
        CHECK_THROWS_WITH_AS(synth_bscan(sc.scan, sc.model, sc.pulse, band, tiny), doctest::Contains("required"),
                             InvalidArgument);

        ScanConfig one;
        one.x_positions = {0.0};
        const auto rec = plan_bscan_record(one, sc.model, band);
        const auto single = synth_bscan(one, sc.model, sc.pulse.with_mu(rec.mu), band, rec);
        CHECK(single.n_positions() == 1);
        const auto m = bscan_metrics(compress_bscan(single, sc.model, band), one);
        CHECK(m.apex_x == 0.0);

        BScan zero({0.0, 0.1}, 0.0, 1e-11, 64);
        ScanConfig two;
        two.x_positions = {0.0, 0.1};
        CHECK_THROWS_AS(bscan_metrics(zero, two), InvalidArgument);
        CHECK_THROWS_AS(bscan_metrics(zero, one), InvalidArgument);
    }
}
