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
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace sinuous;

TEST_SUITE("dispersion")
{
    TEST_CASE("phi0 from tau")
    {
        CHECK(default_model(0.8547, 10e9).phi0 == doctest::Approx(20.01).epsilon(0.005 / 20.01));
        CHECK(default_model(0.8547, 10e9).phi0 == doctest::Approx(20.00953905788104).epsilon(1e-14));
        CHECK(default_model(std::exp(-pi), 1e9).phi0 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(default_model(0.5, 1e9).phi0 == doctest::Approx(4.532360141827194).epsilon(1e-14));
        CHECK_FALSE(default_model(0.5, 1e9).capped());
        for (double bad : {0.0, 1.0, 1.5, -0.2})
            CHECK_THROWS_AS(default_model(bad, 1e9), InvalidArgument);
    }

    TEST_CASE("model validation")
    {
        DispersionModel m{20.0, 10e9, std::nullopt, std::nullopt};
        CHECK_NOTHROW(m.validate());
        m.phi0 = 0.0;
        CHECK_THROWS_AS(m.validate(), InvalidArgument);
        m = {20.0, 10e9, 12e9, 1e-9};
        CHECK_THROWS_AS(m.validate(), InvalidArgument); // f_low above f0
        m = {20.0, 10e9, 1e9, std::nullopt};
        CHECK_THROWS_AS(m.validate(), InvalidArgument);
        m = {20.0, 10e9, std::nullopt, 1e-9};
        CHECK_THROWS_AS(m.validate(), InvalidArgument);
    }

    TEST_CASE("model phase")
    {
        const auto def = default_model(0.8547, 10e9);
        CHECK(def.phase(10e9) == 0.0);
        CHECK(def.phase(5e9) == doctest::Approx(def.phi0 * std::log(2.0)).epsilon(1e-14));
        CHECK(def.phase(5e9) == doctest::Approx(13.87).epsilon(1e-3));

        const auto opt = with_cap(DispersionModel{18.39, 10.8e9, std::nullopt, std::nullopt}, 0.8e9, 3.69e-9);
        const double at_cap = -18.39 * std::log(0.8e9 / 10.8e9);
        CHECK(opt.phase(0.8e9) == doctest::Approx(at_cap).epsilon(1e-14));
        CHECK(opt.phase(0.4e9) == doctest::Approx(at_cap + 3.69e-9 * 2.0 * pi * 0.4e9).epsilon(1e-14));

        CHECK_THROWS_AS(def.phase(0.0), InvalidArgument);
        CHECK_THROWS_AS(model_phase(def, FrequencyGrid{0.0, 1e6, 10}), InvalidArgument);
    }

    TEST_CASE("model group delay")
    {
        const auto def = default_model(0.8547, 10e9);
        CHECK(def.group_delay(1e9) == doctest::Approx(3.1847e-9).epsilon(1e-4));
        CHECK(def.group_delay(10e9) == doctest::Approx(def.phi0 / (2.0 * pi * 10e9)).epsilon(1e-15));
        const auto opt = with_cap(DispersionModel{18.39, 10.8e9, std::nullopt, std::nullopt}, 0.8e9, 3.69e-9);
        CHECK(opt.group_delay(0.5e9) == 3.69e-9);
        CHECK(opt.group_delay(1e9) == doctest::Approx(18.39 / (2.0 * pi * 1e9)));

        const FrequencyGrid g{0.5e9, 10e6, 300};
        const auto d = model_group_delay(opt, g);
        CHECK(max_group_delay(opt, g) == *std::max_element(d.delay.begin(), d.delay.end()));
        CHECK_THROWS_AS(model_group_delay(def, FrequencyGrid{0.0, 1e6, 10}), InvalidArgument);
    }

    TEST_CASE("log-periodic phase step")
    {
        const auto def = default_model(0.8547, 10e9);
        testing::Rng rng(42);
        for (int i = 0; i < 100; ++i)
        {
            const double f = rng.uniform(0.8e9 / 0.8547, 10e9);
            CHECK(std::abs(def.phase(0.8547 * f) - def.phase(f) - pi) < 1e-9);
        }
    }

    TEST_CASE("cap continuity")
    {
        testing::Rng rng(8);
        for (int i = 0; i < 20; ++i)
        {
            const DispersionModel base{rng.uniform(1.0, 30.0), rng.uniform(5e9, 20e9), std::nullopt, std::nullopt};
            const double f_low = rng.uniform(0.3e9, 2e9);
            const auto capped = with_cap(base, f_low);
            CHECK(*capped.tau_c == doctest::Approx(base.phi0 / (2.0 * pi * f_low)).epsilon(1e-15));
            const double below = f_low * (1.0 - 1e-9), above = f_low * (1.0 + 1e-9);
            CHECK(std::abs(capped.phase(below) - capped.phase(above)) < 1e-6);
            CHECK(testing::rel_close(capped.group_delay(below), capped.group_delay(above), 1e-8));
            // explicit tau_c keeps the phase continuous but not the delay
            const auto jump = with_cap(base, f_low, 2.0 * *capped.tau_c);
            CHECK(std::abs(jump.phase(below) - jump.phase(above)) < 1e-6);
            CHECK(jump.group_delay(below) == doctest::Approx(2.0 * jump.group_delay(above)).epsilon(1e-8));
        }
    }

    TEST_CASE("apply and compress are exact inverses")
    {
        testing::Rng rng(4);
        const FrequencyGrid g{0.05e9, 50e6, 240};
        ComplexSpectrum x{g, std::vector<Complex>(g.n)};
        for (auto &v : x.values)
            v = std::polar(rng.uniform(0.1, 2.0), rng.uniform(-pi, pi));
        const auto model = with_cap(default_model(0.8547, 10e9), 0.8e9);
        for (int passes : {1, 2, 3})
        {
            const auto y = apply_dispersion(x, model, passes);
            const auto back = compress(y, model, passes);
            for (std::size_t k = 0; k < g.n; ++k)
            {
                CHECK(std::abs(back.values[k] - x.values[k]) < 1e-12 * std::abs(x.values[k]));
                CHECK(std::abs(y.values[k]) == doctest::Approx(std::abs(x.values[k])).epsilon(1e-14));
            }
        }
        const auto once = apply_dispersion(x, model, 1);
        const auto twice = apply_dispersion(x, model, 2);
        const auto again = apply_dispersion(once, model, 1);
        for (std::size_t k = 0; k < g.n; ++k)
            CHECK(std::abs(twice.values[k] - again.values[k]) < 1e-10);
        CHECK_THROWS_AS(apply_dispersion(x, model, 0), InvalidArgument);
        CHECK_THROWS_AS(compress(x, model, -1), InvalidArgument);
    }

    TEST_CASE("group delay of an applied transfer reproduces the model")
    {
        const FrequencyGrid g{0.8e9, 1e6, 9201};
        const auto model = default_model(0.8547, 10e9);
        const auto h = apply_dispersion(ComplexSpectrum::ones(g), model, 1);
        PhaseCurve arg{g, std::vector<double>(g.n), true};
        for (std::size_t k = 0; k < g.n; ++k)
            arg.phase[k] = std::arg(h.values[k]);
        const auto measured = group_delay(unwrap_phase_from_top(arg));
        const auto analytic = model_group_delay(model, g);
        for (std::size_t k = 0; k < g.n; k += 97)
            CHECK(testing::rel_close(measured.delay[k], analytic.delay[k], 1e-5));
    }

    TEST_CASE("numeric delay of the capped phase matches away from the corner")
    {
        const FrequencyGrid g{0.2e9, 1e6, 2000};
        const auto model = with_cap(DispersionModel{18.39, 10.8e9, std::nullopt, std::nullopt}, 0.8e9, 3.69e-9);
        const auto measured = group_delay(model_phase(model, g));
        for (std::size_t k = 0; k < g.n; k += 37)
        {
            if (std::abs(g.frequency(k) - 0.8e9) < 3e6)
                continue;
            CHECK(testing::rel_close(measured.delay[k], model.group_delay(g.frequency(k)), 1e-5));
        }
    }
}
