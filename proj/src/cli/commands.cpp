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

#include "sinuous/cli/commands.hpp"
#include "sinuous/cli/csv.hpp"
#include "sinuous/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>

namespace sinuous::cli
{
    namespace fs = std::filesystem;
    using KeyValues = std::vector<std::pair<std::string, std::string>>;

    int exit_code_for(const std::exception &e)
    {
        if (dynamic_cast<const ConfigError *>(&e) || dynamic_cast<const InvalidArgument *>(&e) ||
            dynamic_cast<const fs::filesystem_error *>(&e))
            return exit_config;
        if (dynamic_cast<const DataError *>(&e))
            return exit_data;
        if (dynamic_cast<const NumericError *>(&e))
            return exit_numeric;
        return exit_failure;
    }

    namespace
    {
        void prepare_out_dir(const fs::path &dir)
        {
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec || !fs::is_directory(dir))
                throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
        }

        void require_finite(const std::vector<double> &v, const std::string &what)
        {
            for (double x : v)
                if (!std::isfinite(x))
                    throw NumericError(what + " contains non-finite values");
        }

        std::string fixed(double v, int digits)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*f", digits, v);
            return buf;
        }

        void write_polyline(const fs::path &path, const PolarPolyline &line)
        {
            // cell is an integer column, written without an exponent
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw ConfigError("cannot write '" + path.string() + "'");
            out << "cell,r_m,phi_rad\n";
            for (const auto &p : line.points)
                out << p.cell << "," << format_number(p.r) << "," << format_number(p.phi) << "\n";
            if (!out)
                throw ConfigError("error while writing '" + path.string() + "'");
        }

        // One closed outline per arm; arms are copies rotated by 2 pi / N.
        void write_svg(const fs::path &path, const SinuousParams &params, const ArmEdges &edges)
        {
            const double extent = 1000.0 * params.r1 * 1.05; // mm
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw ConfigError("cannot write '" + path.string() + "'");
            out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(2 * extent, 3) << "mm\" height=\""
                << fixed(2 * extent, 3) << "mm\" viewBox=\"" << fixed(-extent, 3) << " " << fixed(-extent, 3) << " "
                << fixed(2 * extent, 3) << " " << fixed(2 * extent, 3) << "\">\n";
            for (int arm = 0; arm < params.n_arms; ++arm)
            {
                const double rot = 2.0 * pi * arm / params.n_arms;
                auto xy = [&](const PolarPoint &p) {
                    const double a = p.phi + rot;
                    // SVG y grows downward
                    return fixed(1000.0 * p.r * std::cos(a), 6) + " " + fixed(-1000.0 * p.r * std::sin(a), 6);
                };
                out << "  <path id=\"arm" << arm + 1 << "\" fill=\"#b87333\" stroke=\"none\" d=\"M "
                    << xy(edges.plus.points.front());
                for (std::size_t i = 1; i < edges.plus.points.size(); ++i)
                    out << " L " << xy(edges.plus.points[i]);
                for (auto it = edges.minus.points.rbegin(); it != edges.minus.points.rend(); ++it)
                    out << " L " << xy(*it);
                out << " Z\"/>\n";
            }
            out << "</svg>\n";
            if (!out)
                throw ConfigError("error while writing '" + path.string() + "'");
        }

        KeyValues model_entries(const DispersionModel &m)
        {
            return {{"phi0_rad", format_number(m.phi0)},
                    {"f0_hz", format_number(m.f0)},
                    {"f_low_hz", m.f_low ? format_number(*m.f_low) : "none"},
                    {"tau_c_s", m.tau_c ? format_number(*m.tau_c) : "none"}};
        }

        void append_pulse_metrics(KeyValues &kv, const std::string &prefix, const PulseMetrics &m)
        {
            kv.emplace_back(prefix + "_peak_v", format_number(m.peak));
            kv.emplace_back(prefix + "_env_width_s", format_number(m.env_width_m6db));
            kv.emplace_back(prefix + "_fidelity", format_number(m.fidelity));
        }

        void write_bscan(const fs::path &path, const BScan &b)
        {
            const std::size_t total = b.n_positions() * b.n_time();
            std::vector<double> x(total), t(total), v(total);
            std::size_t i = 0;
            for (std::size_t ix = 0; ix < b.n_positions(); ++ix)
                for (std::size_t it = 0; it < b.n_time(); ++it, ++i)
                {
                    x[i] = b.x_positions()[ix];
                    t[i] = b.t0() + static_cast<double>(it) * b.dt();
                    v[i] = b.at(it, ix);
                }
            require_finite(v, "B-scan");
            write_csv(path,
                      {{"dt", format_number(b.dt())},
                       {"t0", format_number(b.t0())},
                       {"nx", std::to_string(b.n_positions())},
                       {"nt", std::to_string(b.n_time())}},
                      {"x_m", "t_s", "v"}, {x, t, v});
        }
    }

    void cmd_geom(const RunConfig &config, const fs::path &out_dir, std::ostream &log)
    {
        const auto params = antenna_section(config);
        const int spc = samples_per_cell(config);
        const auto medium = antenna_medium(config);
        const double f_max = config.number("antenna.f_max_hz", 10e9);
        if (!(f_max > 0.0))
            throw ConfigError("antenna.f_max_hz must be > 0");

        prepare_out_dir(out_dir);
        const auto centerline = sample_centerline(params, spc);
        const auto edges = arm_edges(params, spc);
        write_polyline(out_dir / "centerline.csv", centerline);
        write_polyline(out_dir / "edge_plus.csv", edges.plus);
        write_polyline(out_dir / "edge_minus.csv", edges.minus);
        write_svg(out_dir / "antenna.svg", params, edges);

        const double f_low = lowest_operating_frequency(params, medium);
        log << "lowest operating frequency f_L = " << fixed(f_low / 1e6, 1) << " MHz (" << format_number(f_low)
            << " Hz)\n";
        log << "cell radii:\n";
        const auto radii = cell_radii(params);
        for (std::size_t p = 0; p < radii.size(); ++p)
            log << "  R_" << std::setw(2) << std::left << p + 1 << std::right << " = " << format_number(radii[p])
                << " m\n";
        log << "design checks:\n";
        for (const auto &c : design_checks(params, f_max, medium).checks)
            log << "  " << std::setw(26) << std::left << c.name << std::right
                << (c.advisory ? " info" : (c.passed ? " pass" : " FAIL")) << "  "
                << format_number(c.value) << "  " << c.description << "\n";
    }

    void cmd_model(const RunConfig &config, const fs::path &out_dir, std::ostream &log)
    {
        const auto model = model_section(config);
        const auto grid = grid_section(config);
        if (grid.f_start <= 0.0)
            throw ConfigError("grid contains 0 Hz where the dispersion model is undefined; set grid.f_start_hz > 0");

        const auto phase = model_phase(model, grid);
        const auto gd = model_group_delay(model, grid);
        require_finite(phase.phase, "model phase");

        prepare_out_dir(out_dir);
        std::vector<double> f(grid.n);
        for (std::size_t k = 0; k < grid.n; ++k)
            f[k] = grid.frequency(k);
        write_csv(out_dir / "phase.csv", {}, {"f_hz", "phase_rad"}, {f, phase.phase});
        write_csv(out_dir / "gd.csv", {}, {"f_hz", "delay_s"}, {f, gd.delay});
        log << "phi0 = " << format_number(model.phi0) << " rad, f0 = " << format_number(model.f0) << " Hz";
        if (model.capped())
            log << ", cap below " << format_number(*model.f_low) << " Hz at " << format_number(*model.tau_c) << " s";
        log << "\n";
    }

    void cmd_fit(const RunConfig &config, const FitInputs &inputs, const fs::path &out_dir, std::ostream &log)
    {
        std::optional<fs::path> phase_path = inputs.phase_csv;
        std::optional<fs::path> field_path = inputs.field_csv;
        if (!phase_path && config.has("io.phase_csv"))
            phase_path = config.text("io.phase_csv", "");
        if (!field_path && config.has("io.field_csv"))
            field_path = config.text("io.field_csv", "");
        if (phase_path.has_value() == field_path.has_value())
            throw ConfigError("fit needs exactly one of a phase CSV or a field CSV");

        // Inputs are read and checked before anything is computed.
        PhaseCurve reference;
        if (phase_path)
            reference = read_phase_csv(*phase_path);
        else
        {
            const auto data = read_field_csv(*field_path);
            const double r_probe = config.number("io.r_probe_m", 2.0);
            const double eps_rel = config.number("io.eps_rel", default_eps_rel);
            const auto medium = [&] {
                try
                {
                    return Medium::from_permittivity(config.number("io.eps_r", 1.0));
                }
                catch (const InvalidArgument &e)
                {
                    throw ConfigError(std::string("[io] ") + e.what());
                }
            }();
            try
            {
                const auto field = data.excitation ? deconvolve(data.field, *data.excitation, eps_rel) : data.field;
                const auto back = backpropagate_phase(field, r_probe, medium);
                if (!back.gaps.empty())
                    log << "warning: " << back.gaps.size() << " zero-magnitude samples filled by interpolation\n";
                reference = back.phase;
            }
            catch (const InvalidArgument &e)
            {
                throw DataError(std::string("field data: ") + e.what());
            }
        }

        auto fit_config = fit_section(config, reference);
        if (inputs.seed)
            fit_config.seed = *inputs.seed;
        const auto result = fit_config.fit_cap ? fit_with_cap(reference, fit_config) : fit(reference, fit_config);

        prepare_out_dir(out_dir);
        auto kv = model_entries(result.model);
        kv.emplace_back("rms_residual_rad", format_number(result.rms_residual));
        kv.emplace_back("converged", result.converged ? "true" : "false");
        kv.emplace_back("tau_c_identified", result.tau_c_identified ? "true" : "false");
        kv.emplace_back("iterations", std::to_string(result.iterations));
        write_kv(out_dir / "fit.kv", kv);

        std::vector<double> f, residual;
        for (std::size_t k = 0; k < reference.grid.n; ++k)
        {
            const double fk = reference.grid.frequency(k);
            if (fk <= 0.0 || fk < fit_config.band.f_min || fk > fit_config.band.f_max)
                continue;
            f.push_back(fk);
            residual.push_back(result.model.phase(fk) - reference.phase[k]);
        }
        require_finite(residual, "fit residual");
        write_csv(out_dir / "residual.csv", {}, {"f_hz", "residual_rad"}, {f, residual});

        log << "phi0 = " << format_number(result.model.phi0) << " rad, f0 = " << format_number(result.model.f0)
            << " Hz, rms residual = " << format_number(result.rms_residual) << " rad"
            << (result.converged ? "" : " (not converged)") << "\n";
    }

    void cmd_pulse(const RunConfig &config, const fs::path &out_dir, std::ostream &log)
    {
        const auto model = model_section(config);
        const auto band = grid_section(config);
        const auto passes = static_cast<int>(config.integer("pulse.passes", 1));
        if (passes < 1)
            throw ConfigError("pulse.passes must be >= 1");

        const auto record = explicit_record(config).value_or(plan_record(model, band, passes));
        const auto pulse = pulse_section(config, record);
        const auto run = run_pulse_pipeline(pulse, model, model, band, record, passes);
        require_finite(run.dispersed.samples, "dispersed pulse");
        require_finite(run.compressed.samples, "compressed pulse");

        const double outside = out_of_band_energy_fraction(run.input, band);
        if (outside > 0.01)
            log << "warning: " << fixed(100.0 * outside, 2)
                << "% of the pulse energy lies outside the grid and passes through uncorrected\n";

        const auto m_in = pulse_metrics(run.input, run.input);
        const auto m_disp = pulse_metrics(run.dispersed, run.input);
        const auto m_comp = pulse_metrics(run.compressed, run.input);

        prepare_out_dir(out_dir);
        write_time_series(out_dir / "input.csv", run.input);
        write_time_series(out_dir / "dispersed.csv", run.dispersed);
        write_time_series(out_dir / "compressed.csv", run.compressed);

        KeyValues kv;
        append_pulse_metrics(kv, "input", m_in);
        append_pulse_metrics(kv, "dispersed", m_disp);
        append_pulse_metrics(kv, "compressed", m_comp);
        kv.emplace_back("dispersed_width_ratio", format_number(m_disp.env_width_m6db / m_in.env_width_m6db));
        kv.emplace_back("compressed_width_ratio", format_number(m_comp.env_width_m6db / m_in.env_width_m6db));
        kv.emplace_back("record_dt_s", format_number(record.dt));
        kv.emplace_back("record_n", std::to_string(record.n));
        kv.emplace_back("out_of_band_energy_fraction", format_number(outside));
        write_kv(out_dir / "metrics.kv", kv);

        log << "fidelity: dispersed " << fixed(m_disp.fidelity, 4) << ", compressed " << fixed(m_comp.fidelity, 4)
            << "; -6 dB width: input " << format_number(m_in.env_width_m6db) << " s, dispersed "
            << format_number(m_disp.env_width_m6db) << " s, compressed " << format_number(m_comp.env_width_m6db)
            << " s\n";
    }

    void cmd_bscan(const RunConfig &config, const fs::path &out_dir, std::ostream &log)
    {
        const auto scan = scan_section(config);
        const auto model = model_section(config);
        const auto band = grid_section(config);
        const auto record = explicit_record(config).value_or(plan_bscan_record(scan, model, band));
        const auto pulse = pulse_section(config, record);

        const auto dispersed = synth_bscan(scan, model, pulse, band, record);
        const auto compressed = compress_bscan(dispersed, model, band, 2);
        const auto m_disp = bscan_metrics(dispersed, scan);
        const auto m_comp = bscan_metrics(compressed, scan);

        prepare_out_dir(out_dir);
        write_bscan(out_dir / "bscan_dispersed.csv", dispersed);
        write_bscan(out_dir / "bscan_compressed.csv", compressed);

        KeyValues kv;
        for (const auto &[name, m] : {std::pair{std::string("dispersed"), m_disp}, std::pair{std::string("compressed"), m_comp}})
        {
            kv.emplace_back(name + "_apex_x_m", format_number(m.apex_x));
            kv.emplace_back(name + "_apex_time_s", format_number(m.apex_time));
            kv.emplace_back(name + "_range_width_s", format_number(m.range_width_m6db));
        }
        kv.emplace_back("two_way_delay_at_target_s", format_number(two_way_delay(scan, scan.target_x)));
        kv.emplace_back("pulse_mu_s", format_number(pulse.mu()));
        kv.emplace_back("record_dt_s", format_number(record.dt));
        kv.emplace_back("record_n", std::to_string(record.n));
        write_kv(out_dir / "metrics.kv", kv);

        log << "apex at x = " << format_number(m_comp.apex_x) << " m; -6 dB range width: dispersed "
            << format_number(m_disp.range_width_m6db) << " s, compressed " << format_number(m_comp.range_width_m6db)
            << " s\n";
    }
}
