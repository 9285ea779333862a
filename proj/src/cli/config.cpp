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

#include "sinuous/cli/config.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sinuous::cli
{
    const std::vector<KeySpec> &known_keys()
    {
        static const std::vector<KeySpec> keys = {
            {"antenna.n_arms", "number of arms N (default 4)"},
            {"antenna.n_cells", "cells per arm P (default 20)"},
            {"antenna.r1_m", "outermost cell radius R_1 in m (default 0.10)"},
            {"antenna.r_trunc_m", "truncation radius R_T in m (optional)"},
            {"antenna.r_in_m", "bow-tie feed radius in m (default 0.004)"},
            {"antenna.tau", "growth ratio (default 0.8547)"},
            {"antenna.alpha_deg", "cell angular width in degrees (default 45)"},
            {"antenna.delta_deg", "arm rotation angle in degrees (default 22.5)"},
            {"antenna.samples_per_cell", "curve samples per cell (default 64)"},
            {"antenna.eps_r", "relative permittivity around the antenna (default 1)"},
            {"antenna.f_max_hz", "highest design frequency for the feed check (default 10e9)"},
            {"model.tau", "growth ratio used for the default phi0 (default antenna.tau)"},
            {"model.phi0_rad", "phi0 in rad (default -pi/ln tau)"},
            {"model.f0_hz", "zero-phase frequency in Hz (default 10e9)"},
            {"model.f_low_hz", "cap cutoff in Hz (optional)"},
            {"model.tau_c_s", "group delay below the cap in s (default phi0/w_L)"},
            {"grid.f_start_hz", "first grid frequency in Hz (default 0.1e9)"},
            {"grid.f_step_hz", "grid step in Hz (default 10e6)"},
            {"grid.n", "number of grid samples (default 991)"},
            {"pulse.v_peak_v", "pulse peak in V (default 1)"},
            {"pulse.f_bw_hz", "pulse bandwidth w_BW/2pi in Hz (default 6e9)"},
            {"pulse.mu_s", "pulse centre in s (default 25% of the record)"},
            {"pulse.t0_s", "record start time in s (default 0)"},
            {"pulse.dt_s", "record sample step in s (optional, planned otherwise)"},
            {"pulse.n", "record length in samples (optional, planned otherwise)"},
            {"pulse.passes", "number of dispersion passes (default 1)"},
            {"scan.x_start_m", "first scan position in m (default -0.5)"},
            {"scan.x_step_m", "scan step in m (default 0.01)"},
            {"scan.nx", "number of scan positions (default 101)"},
            {"scan.antenna_height_m", "antenna height above ground in m (default 0.025)"},
            {"scan.target_depth_m", "target depth in m (default 0.20)"},
            {"scan.target_x_m", "target position along the scan in m (default 0)"},
            {"scan.soil_eps_r", "soil relative permittivity (default 2.5)"},
            {"scan.air_eps_r", "air relative permittivity (default 1)"},
            {"scan.amplitude_exponent", "spreading exponent (default 2)"},
            {"fit.f_min_hz", "fit band start in Hz (default: reference start)"},
            {"fit.f_max_hz", "fit band end in Hz (default: reference end)"},
            {"fit.cap", "fit the low-frequency cap too (default false)"},
            {"fit.tau_c_continuous", "tie tau_c to phi0/w_L when fitting the cap (default false)"},
            {"fit.restarts", "number of restarts (default 4)"},
            {"fit.max_iters", "simplex iterations per restart (default 4000)"},
            {"fit.tol", "relative objective tolerance (default 1e-12)"},
            {"fit.weighting", "uniform or inverse_frequency (default uniform)"},
            {"fit.seed", "restart seed (default 0; --seed overrides)"},
            {"fit.init_phi0_rad", "initial phi0 (default from the model section)"},
            {"fit.init_f0_hz", "initial f0 (default from the model section)"},
            {"fit.init_f_low_hz", "initial cap cutoff (optional)"},
            {"fit.init_tau_c_s", "initial tau_c (optional)"},
            {"io.phase_csv", "reference phase CSV (f_hz,phase_rad)"},
            {"io.field_csv", "probed field CSV (f_hz,re,im[,v_re,v_im])"},
            {"io.r_probe_m", "probe distance for back-propagation in m (default 2)"},
            {"io.eps_r", "medium between antenna and probe (default 1)"},
            {"io.eps_rel", "deconvolution regularization (default 1e-4)"},
        };
        return keys;
    }

    namespace
    {
        std::string trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return std::string(s.substr(first, last - first + 1));
        }

        bool is_known(const std::string &key)
        {
            const auto &keys = known_keys();
            return std::any_of(keys.begin(), keys.end(), [&](const KeySpec &k) { return k.key == key; });
        }

        double parse_double(const std::string &key, const std::string &value)
        {
            double out = 0.0;
            const char *begin = value.data();
            const char *end = begin + value.size();
            auto [ptr, ec] = std::from_chars(begin, end, out);
            if (ec != std::errc() || ptr != end || !std::isfinite(out))
                throw ConfigError("config key '" + key + "': '" + value + "' is not a finite number");
            return out;
        }

        double degrees(double deg)
        {
            return deg * pi / 180.0;
        }

        template <typename Fn>
        auto as_config_error(const std::string &section, Fn &&fn)
        {
            try
            {
                return fn();
            }
            catch (const InvalidArgument &e)
            {
                throw ConfigError("[" + section + "] " + e.what());
            }
        }
    }

    RunConfig RunConfig::parse(std::string_view text)
    {
        RunConfig cfg;
        std::istringstream in{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            const auto stripped = trim(line);
            if (stripped.empty() || stripped.front() == '#')
                continue;
            const auto eq = stripped.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
            const auto key = trim(std::string_view(stripped).substr(0, eq));
            const auto value = trim(std::string_view(stripped).substr(eq + 1));
            if (!is_known(key))
                throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            if (value.empty())
                throw ConfigError("config line " + std::to_string(line_no) + ": key '" + key + "' has no value");
            cfg.values_[key] = value;
        }
        return cfg;
    }

    RunConfig RunConfig::load(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot read config file '" + path.string() + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    std::string RunConfig::emit() const
    {
        std::string out;
        for (const auto &[k, v] : values_)
            out += k + "=" + v + "\n";
        return out;
    }

    void RunConfig::set(const std::string &key, const std::string &value)
    {
        if (!is_known(key))
            throw ConfigError("unknown key '" + key + "'");
        values_[key] = value;
    }

    double RunConfig::number(const std::string &key, double fallback) const
    {
        return optional_number(key).value_or(fallback);
    }

    std::optional<double> RunConfig::optional_number(const std::string &key) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return std::nullopt;
        return parse_double(key, it->second);
    }

    long long RunConfig::integer(const std::string &key, long long fallback) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return fallback;
        long long out = 0;
        const auto &v = it->second;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || ptr != v.data() + v.size())
            throw ConfigError("config key '" + key + "': '" + v + "' is not an integer");
        return out;
    }

    bool RunConfig::boolean(const std::string &key, bool fallback) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return fallback;
        if (it->second == "true" || it->second == "1")
            return true;
        if (it->second == "false" || it->second == "0")
            return false;
        throw ConfigError("config key '" + key + "': expected true or false, got '" + it->second + "'");
    }

    std::string RunConfig::text(const std::string &key, const std::string &fallback) const
    {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    SinuousParams antenna_section(const RunConfig &config)
    {
        return as_config_error("antenna", [&] {
            SinuousParams p;
            p.n_arms = static_cast<int>(config.integer("antenna.n_arms", 4));
            p.n_cells = static_cast<int>(config.integer("antenna.n_cells", 20));
            p.r1 = config.number("antenna.r1_m", 0.10);
            p.r_trunc = config.optional_number("antenna.r_trunc_m");
            p.r_in = config.number("antenna.r_in_m", 0.004);
            p.tau = config.number("antenna.tau", 0.8547);
            p.alpha = degrees(config.number("antenna.alpha_deg", 45.0));
            p.delta = degrees(config.number("antenna.delta_deg", 22.5));
            p.validate();
            return p;
        });
    }

    int samples_per_cell(const RunConfig &config)
    {
        const auto n = config.integer("antenna.samples_per_cell", 64);
        if (n < 2)
            throw ConfigError("antenna.samples_per_cell must be >= 2");
        return static_cast<int>(n);
    }

    Medium antenna_medium(const RunConfig &config)
    {
        return as_config_error("antenna", [&] { return Medium::from_permittivity(config.number("antenna.eps_r", 1.0)); });
    }

    DispersionModel model_section(const RunConfig &config)
    {
        return as_config_error("model", [&] {
            const double f0 = config.number("model.f0_hz", 10e9);
            DispersionModel m;
            if (auto phi0 = config.optional_number("model.phi0_rad"))
            {
                m.phi0 = *phi0;
                m.f0 = f0;
            }
            else
            {
                const double tau = config.number("model.tau", config.number("antenna.tau", 0.8547));
                m = default_model(tau, f0);
            }
            if (auto f_low = config.optional_number("model.f_low_hz"))
                m = with_cap(m, *f_low, config.optional_number("model.tau_c_s"));
            else if (config.has("model.tau_c_s"))
                throw InvalidArgument("model.tau_c_s needs model.f_low_hz");
            m.validate();
            return m;
        });
    }

    FrequencyGrid grid_section(const RunConfig &config)
    {
        return as_config_error("grid", [&] {
            const auto n = config.integer("grid.n", 991);
            if (n < 2)
                throw InvalidArgument("grid.n must be >= 2");
            FrequencyGrid g{config.number("grid.f_start_hz", 0.1e9), config.number("grid.f_step_hz", 10e6),
                            static_cast<std::size_t>(n)};
            g.validate();
            return g;
        });
    }

    ScanConfig scan_section(const RunConfig &config)
    {
        return as_config_error("scan", [&] {
            ScanConfig s;
            const auto nx = config.integer("scan.nx", 101);
            if (nx < 1)
                throw InvalidArgument("scan.nx must be >= 1");
            const double x0 = config.number("scan.x_start_m", -0.5);
            const double dx = config.number("scan.x_step_m", 0.01);
            for (long long i = 0; i < nx; ++i)
                s.x_positions.push_back(x0 + static_cast<double>(i) * dx);
            s.antenna_height = config.number("scan.antenna_height_m", 0.025);
            s.target_depth = config.number("scan.target_depth_m", 0.20);
            s.target_x = config.number("scan.target_x_m", 0.0);
            s.soil = Medium::from_permittivity(config.number("scan.soil_eps_r", 2.5));
            s.air = Medium::from_permittivity(config.number("scan.air_eps_r", 1.0));
            s.amplitude_exponent = config.number("scan.amplitude_exponent", 2.0);
            s.validate();
            return s;
        });
    }

    FitConfig fit_section(const RunConfig &config, const PhaseCurve &reference)
    {
        return as_config_error("fit", [&] {
            FitConfig f;
            const double first_positive = reference.grid.f_start > 0.0 ? reference.grid.f_start
                                                                         : reference.grid.frequency(1);
            f.band.f_min = config.number("fit.f_min_hz", first_positive);
            f.band.f_max = config.number("fit.f_max_hz", reference.grid.f_end());
            f.fit_cap = config.boolean("fit.cap", false);
            f.tau_c_continuous = config.boolean("fit.tau_c_continuous", false);
            f.restarts = static_cast<int>(config.integer("fit.restarts", 4));
            f.max_iters = static_cast<int>(config.integer("fit.max_iters", 4000));
            f.tol = config.number("fit.tol", 1e-12);
            f.seed = static_cast<std::uint64_t>(config.integer("fit.seed", 0));

            const auto weighting = config.text("fit.weighting", "uniform");
            if (weighting == "uniform")
                f.weighting = Weighting::uniform;
            else if (weighting == "inverse_frequency")
                f.weighting = Weighting::inverse_frequency;
            else
                throw InvalidArgument("fit.weighting must be uniform or inverse_frequency");

            DispersionModel init = model_section(config);
            init.f_low.reset();
            init.tau_c.reset();
            init.phi0 = config.number("fit.init_phi0_rad", init.phi0);
            init.f0 = config.number("fit.init_f0_hz", init.f0);
            if (auto f_low = config.optional_number("fit.init_f_low_hz"))
                init = with_cap(init, *f_low, config.optional_number("fit.init_tau_c_s"));
            f.init = init;
            f.validate();
            return f;
        });
    }

    PulseSpec pulse_section(const RunConfig &config, const RecordLayout &record)
    {
        return as_config_error("pulse", [&] {
            const PulseSpec shape(config.number("pulse.v_peak_v", 1.0), record.mu, config.number("pulse.f_bw_hz", 6e9));
            if (auto mu = config.optional_number("pulse.mu_s"))
                return shape.with_mu(*mu);
            return shape.with_mu(peak_aligned_mu(record, shape.sigma()));
        });
    }

    std::optional<RecordLayout> explicit_record(const RunConfig &config)
    {
        const auto dt = config.optional_number("pulse.dt_s");
        const bool has_n = config.has("pulse.n");
        if (!dt && !has_n)
            return std::nullopt;
        if (!dt || !has_n)
            throw ConfigError("pulse.dt_s and pulse.n must be given together");
        const auto n = config.integer("pulse.n", 0);
        if (*dt <= 0.0 || n < 4)
            throw ConfigError("pulse.dt_s must be > 0 and pulse.n >= 4");
        RecordLayout rec;
        rec.t0 = config.number("pulse.t0_s", 0.0);
        rec.dt = *dt;
        rec.n = static_cast<std::size_t>(n);
        rec.mu = rec.t0 + mu_record_fraction * rec.duration();
        return rec;
    }
}
