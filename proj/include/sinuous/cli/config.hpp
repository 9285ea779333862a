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

#ifndef SINUOUS_CLI_CONFIG_HPP
#define SINUOUS_CLI_CONFIG_HPP

#include "sinuous/dispersion.hpp"
#include "sinuous/fitting.hpp"
#include "sinuous/geometry.hpp"
#include "sinuous/gprsim.hpp"
#include "sinuous/pulsegen.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sinuous::cli
{
    struct KeySpec
    {
        std::string_view key;
        std::string_view help;
    };

    // Every key the configuration accepts, grouped by section prefix.
    const std::vector<KeySpec> &known_keys();

    /*!
     * Flat key=value run configuration.
     *
     * One `section.name_unit = value` pair per line; blank lines and lines
     * starting with '#' are ignored. Keys outside known_keys() are rejected
     * with the key and line number in the message. Angles are given in
     * degrees here and converted to radians by the section accessors.
     * Missing keys fall back to the published antenna and pulse values.
     */
    class RunConfig
    {
    public:
        static RunConfig parse(std::string_view text);
        static RunConfig load(const std::filesystem::path &path);

        // Canonical text: recognized keys in sorted order, values verbatim.
        std::string emit() const;

        void set(const std::string &key, const std::string &value);
        bool has(const std::string &key) const { return values_.count(key) != 0; }
        const std::map<std::string, std::string> &entries() const { return values_; }

        double number(const std::string &key, double fallback) const;
        std::optional<double> optional_number(const std::string &key) const;
        long long integer(const std::string &key, long long fallback) const;
        bool boolean(const std::string &key, bool fallback) const;
        std::string text(const std::string &key, const std::string &fallback) const;

        bool operator==(const RunConfig &) const = default;

    private:
        std::map<std::string, std::string> values_;
    };

    SinuousParams antenna_section(const RunConfig &config);
    int samples_per_cell(const RunConfig &config);
    Medium antenna_medium(const RunConfig &config);
    DispersionModel model_section(const RunConfig &config);
    FrequencyGrid grid_section(const RunConfig &config);
    ScanConfig scan_section(const RunConfig &config);
    FitConfig fit_section(const RunConfig &config, const PhaseCurve &reference);

    // Pulse shape. Without pulse.mu_s the pulse sits at the record's default
    // position, nudged so that its extremum lands on a sample.
    PulseSpec pulse_section(const RunConfig &config, const RecordLayout &record);

    // Explicit record from pulse.dt_s / pulse.n / pulse.t0_s, if both are set.
    std::optional<RecordLayout> explicit_record(const RunConfig &config);
}

#endif
