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

#include "sinuous/cli/csv.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sinuous::cli
{
    namespace
    {
        std::vector<std::string> split(const std::string &line)
        {
            std::vector<std::string> out;
            std::string cell;
            std::istringstream in(line);
            while (std::getline(in, cell, ','))
            {
                const auto a = cell.find_first_not_of(" \t\r");
                const auto b = cell.find_last_not_of(" \t\r");
                out.push_back(a == std::string::npos ? std::string() : cell.substr(a, b - a + 1));
            }
            if (!line.empty() && line.back() == ',')
                out.emplace_back();
            return out;
        }

        std::string read_text(const std::filesystem::path &path)
        {
            std::ifstream in(path);
            if (!in)
                throw DataError("cannot read '" + path.string() + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }

        std::ofstream open_for_writing(const std::filesystem::path &path)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw ConfigError("cannot write '" + path.string() + "'");
            return out;
        }

        void finish(std::ofstream &out, const std::filesystem::path &path)
        {
            out.flush();
            if (!out)
                throw ConfigError("error while writing '" + path.string() + "'");
        }
    }

    std::string format_number(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.16e", v);
        return buf;
    }

    std::size_t CsvTable::column(const std::string &name) const
    {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw DataError("missing column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    }

    std::vector<double> CsvTable::values(const std::string &name) const
    {
        const auto c = column(name);
        std::vector<double> out;
        out.reserve(rows.size());
        for (const auto &r : rows)
            out.push_back(r[c]);
        return out;
    }

    CsvTable parse_csv(const std::string &text, const std::string &source)
    {
        CsvTable table;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        bool have_header = false;
        while (std::getline(in, line))
        {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line.front() == '#')
                continue;
            auto cells = split(line);
            if (!have_header)
            {
                table.header = std::move(cells);
                have_header = true;
                continue;
            }
            if (cells.size() != table.header.size())
                throw DataError(source + ":" + std::to_string(line_no) + ": expected " +
                                std::to_string(table.header.size()) + " values, found " + std::to_string(cells.size()));
            std::vector<double> row(cells.size());
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                const auto &c = cells[i];
                auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), row[i]);
                if (c.empty() || ec != std::errc() || ptr != c.data() + c.size() || !std::isfinite(row[i]))
                    throw DataError(source + ":" + std::to_string(line_no) + ": '" + c + "' in column '" +
                                    table.header[i] + "' is not a finite number");
            }
            table.rows.push_back(std::move(row));
            table.line_numbers.push_back(line_no);
        }
        if (!have_header)
            throw DataError(source + ": no header line");
        return table;
    }

    CsvTable read_csv(const std::filesystem::path &path)
    {
        return parse_csv(read_text(path), path.string());
    }

    FrequencyGrid grid_from_frequencies(const CsvTable &table, const std::string &column)
    {
        const auto f = table.values(column);
        if (f.size() < 2)
            throw DataError("need at least 2 frequency rows, found " + std::to_string(f.size()));
        const double step = (f.back() - f.front()) / static_cast<double>(f.size() - 1);
        if (!(step > 0.0))
            throw DataError("frequencies must be strictly increasing");
        for (std::size_t i = 1; i < f.size(); ++i)
        {
            const int line = table.line_numbers[i];
            if (!(f[i] > f[i - 1]))
                throw DataError("line " + std::to_string(line) + ": frequencies must be strictly increasing");
            const double expected = f.front() + static_cast<double>(i) * step;
            if (std::abs(f[i] - expected) > 1e-9 * std::max(std::abs(expected), step))
                throw DataError("line " + std::to_string(line) + ": frequency spacing is not uniform");
        }
        if (f.front() < 0.0)
            throw DataError("frequencies must be >= 0");
        return {f.front(), step, f.size()};
    }

    PhaseCurve read_phase_csv(const std::filesystem::path &path)
    {
        const auto table = read_csv(path);
        table.column("f_hz");
        table.column("phase_rad");
        return {grid_from_frequencies(table, "f_hz"), table.values("phase_rad"), false};
    }

    FieldData read_field_csv(const std::filesystem::path &path)
    {
        const auto table = read_csv(path);
        for (const char *name : {"f_hz", "re", "im"})
            table.column(name);
        const auto grid = grid_from_frequencies(table, "f_hz");

        auto complex_column = [&](const std::string &re, const std::string &im) {
            const auto a = table.values(re), b = table.values(im);
            ComplexSpectrum s{grid, std::vector<Complex>(a.size())};
            for (std::size_t i = 0; i < a.size(); ++i)
                s.values[i] = Complex(a[i], b[i]);
            return s;
        };

        FieldData data{complex_column("re", "im"), std::nullopt};
        const bool has_v_re = std::count(table.header.begin(), table.header.end(), "v_re") > 0;
        const bool has_v_im = std::count(table.header.begin(), table.header.end(), "v_im") > 0;
        if (has_v_re != has_v_im)
            throw DataError("missing column '" + std::string(has_v_re ? "v_im" : "v_re") + "'");
        if (has_v_re)
            data.excitation = complex_column("v_re", "v_im");
        return data;
    }

    void write_csv(const std::filesystem::path &path, const std::vector<std::pair<std::string, std::string>> &metadata,
                   const std::vector<std::string> &header, const std::vector<std::vector<double>> &columns)
    {
        auto out = open_for_writing(path);
        for (const auto &[k, v] : metadata)
            out << "# " << k << "=" << v << "\n";
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << "\n";
        const std::size_t rows = columns.empty() ? 0 : columns.front().size();
        std::string line;
        for (std::size_t r = 0; r < rows; ++r)
        {
            line.clear();
            for (std::size_t c = 0; c < columns.size(); ++c)
            {
                if (c)
                    line += ',';
                line += format_number(columns[c][r]);
            }
            line += '\n';
            out << line;
        }
        finish(out, path);
    }

    void write_time_series(const std::filesystem::path &path, const TimeSeries &ts)
    {
        std::vector<double> t(ts.size());
        for (std::size_t k = 0; k < ts.size(); ++k)
            t[k] = ts.time(k);
        write_csv(path, {}, {"t_s", "v"}, {t, ts.samples});
    }

    void write_kv(const std::filesystem::path &path, const std::vector<std::pair<std::string, std::string>> &entries)
    {
        auto out = open_for_writing(path);
        for (const auto &[k, v] : entries)
            out << k << "=" << v << "\n";
        finish(out, path);
    }

    std::vector<std::pair<std::string, std::string>> read_kv(const std::filesystem::path &path)
    {
        std::istringstream in(read_text(path));
        std::vector<std::pair<std::string, std::string>> out;
        std::string line;
        while (std::getline(in, line))
        {
            const auto eq = line.find('=');
            if (line.empty() || line.front() == '#' || eq == std::string::npos)
                continue;
            out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
        }
        return out;
    }
}
