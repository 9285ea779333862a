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

#ifndef SINUOUS_CLI_CSV_HPP
#define SINUOUS_CLI_CSV_HPP

#include "sinuous/pulsegen.hpp"
#include "sinuous/spectral.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sinuous::cli
{
    // Scientific notation with 17 significant digits; identical input gives
    // identical text on every run.
    std::string format_number(double v);

    struct CsvTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<double>> rows;
        std::vector<int> line_numbers; // source line of each row

        // Index of a named column; throws DataError naming it when absent.
        std::size_t column(const std::string &name) const;
        std::vector<double> values(const std::string &name) const;
    };

    // Lines starting with '#' are metadata and skipped; the first other line
    // is the header. Every row must be numeric with one value per column.
    CsvTable parse_csv(const std::string &text, const std::string &source);
    CsvTable read_csv(const std::filesystem::path &path);

    // Strictly increasing, uniformly spaced (1e-9 relative) frequencies.
    FrequencyGrid grid_from_frequencies(const CsvTable &table, const std::string &column);

    // Columns f_hz, phase_rad.
    PhaseCurve read_phase_csv(const std::filesystem::path &path);

    struct FieldData
    {
        ComplexSpectrum field;
        std::optional<ComplexSpectrum> excitation; // from v_re, v_im when present
    };

    // Columns f_hz, re, im and optionally v_re, v_im.
    FieldData read_field_csv(const std::filesystem::path &path);

    // Writes `# key=value` metadata lines, a header and the columns row by row.
    void write_csv(const std::filesystem::path &path, const std::vector<std::pair<std::string, std::string>> &metadata,
                   const std::vector<std::string> &header, const std::vector<std::vector<double>> &columns);

    void write_time_series(const std::filesystem::path &path, const TimeSeries &ts);

    // One name_unit=value pair per line.
    void write_kv(const std::filesystem::path &path, const std::vector<std::pair<std::string, std::string>> &entries);

    std::vector<std::pair<std::string, std::string>> read_kv(const std::filesystem::path &path);
}

#endif
