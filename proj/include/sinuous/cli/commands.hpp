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

#ifndef SINUOUS_CLI_COMMANDS_HPP
#define SINUOUS_CLI_COMMANDS_HPP

#include "sinuous/cli/config.hpp"

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>

namespace sinuous::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_failure = 1,
        exit_config = 2,
        exit_data = 3,
        exit_numeric = 4,
    };

    // Maps an exception thrown by a command to its process exit code.
    int exit_code_for(const std::exception &e);

    // Centerline/edge CSVs, antenna.svg; prints f_L, cell radii and design checks.
    void cmd_geom(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &log);

    // phase.csv and gd.csv of the configured model on the configured grid.
    void cmd_model(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &log);

    struct FitInputs
    {
        std::optional<std::filesystem::path> phase_csv;
        std::optional<std::filesystem::path> field_csv;
        std::optional<std::uint64_t> seed;
    };

    // fit.kv and residual.csv from a reference phase or a probed field.
    void cmd_fit(const RunConfig &config, const FitInputs &inputs, const std::filesystem::path &out_dir,
                 std::ostream &log);

    // input.csv, dispersed.csv, compressed.csv and metrics.kv.
    void cmd_pulse(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &log);

    // bscan_dispersed.csv, bscan_compressed.csv and metrics.kv.
    void cmd_bscan(const RunConfig &config, const std::filesystem::path &out_dir, std::ostream &log);
}

#endif
