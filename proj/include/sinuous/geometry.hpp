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

#ifndef SINUOUS_GEOMETRY_HPP
#define SINUOUS_GEOMETRY_HPP

#include "sinuous/medium.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sinuous
{
    // Design vector of a log-periodic sinuous antenna. All cells share tau,
    // alpha and delta. Lengths in meters, angles in radians.
    struct SinuousParams
    {
        int n_arms = 4;                 // N
        int n_cells = 20;               // P
        double r1 = 0.10;               // outermost cell radius R_1
        std::optional<double> r_trunc;  // truncation radius R_T <= R_1
        double r_in = 0.004;            // bow-tie feed radius
        double tau = 0.8547;            // growth ratio, R_{p+1} = tau * R_p
        double alpha = pi / 4.0;        // angular width of a cell
        double delta = pi / 8.0;        // rotation that turns the curve into an arm

        // Throws InvalidArgument naming the first violated invariant.
        void validate() const;

        // Copy with every length multiplied by s.
        SinuousParams scaled(double s) const;
    };

    struct PolarPoint
    {
        double r;   // m
        double phi; // rad
        int cell;   // 1-based cell index
    };

    // Sampled arm curve, ordered from the outermost radius inward.
    struct PolarPolyline
    {
        std::vector<PolarPoint> points;
    };

    struct ArmEdges
    {
        PolarPolyline plus;  // centerline rotated by +delta
        PolarPolyline minus; // centerline rotated by -delta
    };

    // [R_1, R_2, ..., R_{P+1}]
    std::vector<double> cell_radii(const SinuousParams &params);

    // Centerline of one arm, sampled uniformly in log-radius within each cell.
    // Neighbouring cells share their boundary sample; it is emitted once and
    // tagged with the outer cell. Points beyond r_trunc are clipped and the
    // crossing is inserted by interpolation in log-radius.
    PolarPolyline sample_centerline(const SinuousParams &params, int samples_per_cell);

    ArmEdges arm_edges(const SinuousParams &params, int samples_per_cell);

    // Chord-sum length of the (untruncated) centerline over cell p in [1, P].
    double cell_arc_length(const SinuousParams &params, int cell, int samples);

    // f_L = v / (4 R_1 (alpha + delta))
    double lowest_operating_frequency(const SinuousParams &params, const Medium &medium);

    struct ActiveRegion
    {
        double radius;    // m, clamped to [r_in, R_1]
        bool out_of_band; // true when clamping happened
    };

    ActiveRegion active_region_radius(double freq, const SinuousParams &params, const Medium &medium);

    struct DesignCheck
    {
        std::string name;
        bool passed;
        double value; // margin or deviation, see description
        std::string description;
        bool advisory = false; // reported only, ignored by all_passed()
    };

    struct DesignReport
    {
        std::vector<DesignCheck> checks;

        const DesignCheck &at(const std::string &name) const;
        bool all_passed() const;
    };

    // Feed radius rule R_in < lambda_min / 4, self-complementarity under both
    // published readings (90deg / N and 90deg / P) and the tau range.
    DesignReport design_checks(const SinuousParams &params, double f_max, const Medium &medium);
}

#endif
