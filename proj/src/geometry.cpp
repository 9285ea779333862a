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

#include "sinuous/geometry.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sinuous
{
    namespace
    {
        // sin(pi u), exactly zero at the cell ends u = 0 and u = 1
        double sin_pi(double u)
        {
            if (u == 0.0 || u == 1.0)
                return 0.0;
            return std::sin(pi * u);
        }

        double cell_sign(int cell)
        {
            return (cell % 2 == 1) ? 1.0 : -1.0; // (-1)^(p-1)
        }

        // Fraction u in [0, 1] of sample s out of m along a cell, uniform in log-radius.
        double cell_fraction(int s, int m)
        {
            if (s == m - 1)
                return 1.0;
            return static_cast<double>(s) / static_cast<double>(m - 1);
        }

        PolarPolyline rotate(const PolarPolyline &line, double angle)
        {
            PolarPolyline out = line;
            for (auto &p : out.points)
                p.phi += angle;
            return out;
        }
    }

    void SinuousParams::validate() const
    {
        detail::require(n_arms >= 1, "n_arms must be positive");
        detail::require(n_cells >= 1, "n_cells must be positive");
        detail::require(tau > 0.0 && tau < 1.0, "tau must lie in (0, 1)");
        detail::require(std::isfinite(r1) && r_in > 0.0 && r_in < r1, "radii must satisfy 0 < r_in < r1");
        if (r_trunc)
            detail::require(r_in < *r_trunc && *r_trunc <= r1, "truncation radius must satisfy r_in < r_trunc <= r1");
        detail::require(alpha > 0.0 && delta > 0.0 && alpha + delta < pi,
                        "angles must satisfy alpha > 0, delta > 0, alpha + delta < pi");
    }

    SinuousParams SinuousParams::scaled(double s) const
    {
        SinuousParams out = *this;
        out.r1 *= s;
        out.r_in *= s;
        if (out.r_trunc)
            *out.r_trunc *= s;
        return out;
    }

    std::vector<double> cell_radii(const SinuousParams &params)
    {
        params.validate();
        std::vector<double> radii;
        radii.reserve(static_cast<std::size_t>(params.n_cells) + 1);
        radii.push_back(params.r1);
        for (int p = 0; p < params.n_cells; ++p)
            radii.push_back(radii.back() * params.tau);
        return radii;
    }

    PolarPolyline sample_centerline(const SinuousParams &params, int samples_per_cell)
    {
        detail::require(samples_per_cell >= 2, "samples_per_cell must be >= 2");
        const auto radii = cell_radii(params);
        const double log_tau = std::log(params.tau);

        PolarPolyline line;
        line.points.reserve(static_cast<std::size_t>(params.n_cells * (samples_per_cell - 1) + 1));
        for (int cell = 1; cell <= params.n_cells; ++cell)
        {
            const double r_outer = radii[static_cast<std::size_t>(cell - 1)];
            const double sign = cell_sign(cell);
            for (int s = (cell == 1 ? 0 : 1); s < samples_per_cell; ++s)
            {
                const double u = cell_fraction(s, samples_per_cell);
                const double r = (s == samples_per_cell - 1) ? radii[static_cast<std::size_t>(cell)]
                                                             : r_outer * std::exp(u * log_tau);
                line.points.push_back({r, sign * params.alpha * sin_pi(u), cell});
            }
        }

        if (!params.r_trunc || *params.r_trunc >= params.r1)
            return line;

        // Drop everything outside R_T and insert the crossing.
        const double r_t = *params.r_trunc;
        const auto &pts = line.points;
        auto first_inside = std::find_if(pts.begin(), pts.end(), [&](const PolarPoint &p) { return p.r <= r_t; });

        PolarPolyline clipped;
        if (first_inside != pts.begin() && first_inside != pts.end() && first_inside->r < r_t)
        {
            const PolarPoint &outer = *(first_inside - 1);
            const PolarPoint &inner = *first_inside;
            const double w = std::log(outer.r / r_t) / std::log(outer.r / inner.r);
            clipped.points.push_back({r_t, outer.phi + w * (inner.phi - outer.phi), inner.cell});
        }
        clipped.points.insert(clipped.points.end(), first_inside, pts.end());
        return clipped;
    }

    ArmEdges arm_edges(const SinuousParams &params, int samples_per_cell)
    {
        const auto centerline = sample_centerline(params, samples_per_cell);
        return {rotate(centerline, params.delta), rotate(centerline, -params.delta)};
    }

    double cell_arc_length(const SinuousParams &params, int cell, int samples)
    {
        params.validate();
        detail::require(cell >= 1 && cell <= params.n_cells, "cell index out of range");
        detail::require(samples >= 16, "cell_arc_length needs at least 16 samples");

        const double r_outer = params.r1 * std::pow(params.tau, cell - 1);
        const double log_tau = std::log(params.tau);
        const double sign = cell_sign(cell);

        double length = 0.0;
        double x_prev = 0.0, y_prev = 0.0;
        for (int s = 0; s < samples; ++s)
        {
            const double u = cell_fraction(s, samples);
            const double r = r_outer * std::exp(u * log_tau);
            const double phi = sign * params.alpha * sin_pi(u);
            const double x = r * std::cos(phi);
            const double y = r * std::sin(phi);
            if (s > 0)
                length += std::hypot(x - x_prev, y - y_prev);
            x_prev = x;
            y_prev = y;
        }
        return length;
    }

    double lowest_operating_frequency(const SinuousParams &params, const Medium &medium)
    {
        params.validate();
        return medium.velocity() / (4.0 * params.r1 * (params.alpha + params.delta));
    }

    ActiveRegion active_region_radius(double freq, const SinuousParams &params, const Medium &medium)
    {
        params.validate();
        detail::require(freq > 0.0, "frequency must be positive");
        const double r = medium.velocity() / (4.0 * freq * (params.alpha + params.delta));
        constexpr double edge_tol = 1e-12; // f == f_L must land on R_1 unflagged
        if (r > params.r1 * (1.0 + edge_tol))
            return {params.r1, true};
        if (r < params.r_in * (1.0 - edge_tol))
            return {params.r_in, true};
        return {std::clamp(r, params.r_in, params.r1), false};
    }

    const DesignCheck &DesignReport::at(const std::string &name) const
    {
        for (const auto &c : checks)
            if (c.name == name)
                return c;
        throw InvalidArgument("no design check named '" + name + "'");
    }

    bool DesignReport::all_passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const DesignCheck &c) { return c.advisory || c.passed; });
    }

    DesignReport design_checks(const SinuousParams &params, double f_max, const Medium &medium)
    {
        detail::require(f_max > 0.0, "f_max must be positive");
        detail::require(params.n_arms >= 1 && params.n_cells >= 1, "n_arms and n_cells must be positive");

        DesignReport report;

        const double quarter_wave = medium.wavelength(f_max) / 4.0;
        const double feed_margin = quarter_wave - params.r_in;
        report.checks.push_back({"feed_radius", feed_margin > 0.0, feed_margin,
                                 "lambda_min/4 - R_in at f_max (m); must be positive"});

        // Two readings of the self-complementary rule exist: 90deg / N matches
        // the published 4-arm, delta = 22.5deg design; 90deg / P is the other.
        constexpr double tol = 1e-12;
        const double dev_arms = std::abs(params.delta - (pi / 2.0) / params.n_arms);
        const double dev_cells = std::abs(params.delta - (pi / 2.0) / params.n_cells);
        report.checks.push_back({"self_complementary_arms", dev_arms <= tol, dev_arms,
                                 "|delta - 90deg/N| (rad)"});
        report.checks.push_back({"self_complementary_cells", dev_cells <= tol, dev_cells,
                                 "|delta - 90deg/P| (rad); alternative reading, reported only", true});

        const bool tau_ok = params.tau > 0.0 && params.tau < 1.0;
        report.checks.push_back({"tau_range", tau_ok, std::min(params.tau, 1.0 - params.tau),
                                 "distance of tau from the ends of (0, 1)"});
        return report;
    }
}
