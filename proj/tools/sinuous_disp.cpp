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

// sinuous-disp command-line front end: geom, model, fit, pulse, bscan.

#include "sinuous/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{
    struct CommonOptions
    {
        std::string config_path;
        std::string out_dir = ".";
        std::optional<std::uint64_t> seed;
    };

    void add_common(CLI::App *cmd, CommonOptions &opts)
    {
        cmd->add_option("--config", opts.config_path, "key=value configuration file");
        cmd->add_option("--out", opts.out_dir, "output directory (created if missing)");
        cmd->add_option("--seed", opts.seed, "seed for fit restarts");
    }
}

int main(int argc, char **argv)
{
    using namespace sinuous::cli;

    CLI::App app{"Sinuous antenna dispersion modelling, fitting and pulse compression"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string phase_csv, field_csv;

    auto *geom = app.add_subcommand("geom", "antenna curves, SVG outline, f_L and design checks");
    auto *model = app.add_subcommand("model", "modelled phase and group delay on the grid");
    auto *fit_cmd = app.add_subcommand("fit", "fit the dispersion model to a phase or field CSV");
    auto *pulse = app.add_subcommand("pulse", "input, dispersed and compressed pulses with metrics");
    auto *bscan = app.add_subcommand("bscan", "surrogate GPR B-scan, dispersed and compressed");
    for (auto *cmd : {geom, model, fit_cmd, pulse, bscan})
        add_common(cmd, opts);
    fit_cmd->add_option("--phase", phase_csv, "reference phase CSV (f_hz,phase_rad)");
    fit_cmd->add_option("--field", field_csv, "probed field CSV (f_hz,re,im[,v_re,v_im])");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        const RunConfig config = opts.config_path.empty() ? RunConfig{} : RunConfig::load(opts.config_path);
        const std::filesystem::path out = opts.out_dir;

        if (geom->parsed())
            cmd_geom(config, out, std::cout);
        else if (model->parsed())
            cmd_model(config, out, std::cout);
        else if (fit_cmd->parsed())
        {
            FitInputs inputs;
            if (!phase_csv.empty())
                inputs.phase_csv = phase_csv;
            if (!field_csv.empty())
                inputs.field_csv = field_csv;
            inputs.seed = opts.seed;
            cmd_fit(config, inputs, out, std::cout);
        }
        else if (pulse->parsed())
            cmd_pulse(config, out, std::cout);
        else if (bscan->parsed())
            cmd_bscan(config, out, std::cout);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return exit_ok;
}
