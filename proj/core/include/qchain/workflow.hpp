// Copyright 2026 The qchain Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qchain/config.hpp"
#include "qchain/error.hpp"
#include "qchain/observables.hpp"

namespace qchain {

/// Library version, "major.minor.patch".
[[nodiscard]] std::string_view version() noexcept;

/// Environment variable naming the output directory when neither `--out`
/// nor `output_dir` is given.
inline constexpr const char *kOutputDirEnv = "QCHAIN_OUTPUT_DIR";
inline constexpr const char *kDefaultOutputDir = "qchain_out";

/// Command-line overrides; set fields take precedence over the input file.
struct RunOptions {
    std::optional<std::filesystem::path> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    bool export_circuits = false;
    bool ground_truth = false;
    /// Worker threads for per-timestep execution; 0 picks the hardware count.
    /// The output does not depend on this value.
    std::size_t threads = 0;
    /// Interval count per timestep for the exact reference of a
    /// time-dependent Hamiltonian.
    std::size_t reference_substeps = 10;
};

/// `config` with the overrides of `options` applied.
[[nodiscard]] SimulationConfig apply_overrides(SimulationConfig config,
                                               const RunOptions &options);

/// --out, then output_dir from the file, then $QCHAIN_OUTPUT_DIR, then
/// "qchain_out".
[[nodiscard]] std::filesystem::path
resolve_output_dir(const SimulationConfig &config, const RunOptions &options);

/// 16 hex digits of FNV-1a over serialize(config).
[[nodiscard]] std::string config_hash(const SimulationConfig &config);

/// Observable series over t (real time) or beta (imaginary time) without
/// touching the filesystem. Throws Unsupported for constant_depth and for
/// export-only configurations.
[[nodiscard]] ResultSeries simulate(const SimulationConfig &config,
                                    const RunOptions &options = {});

struct RunArtifacts {
    std::filesystem::path output_dir;
    std::optional<ResultSeries> series; // absent for export-only runs
    std::vector<std::filesystem::path> files; // every file written, in order
};

/// Full pipeline: simulate (unless export-only), then write series.csv,
/// series.svg, circuits/ (when exporting) and manifest.json.
RunArtifacts run_workflow(const SimulationConfig &config,
                          const RunOptions &options);

/// Process exit codes of the command-line tool.
enum class ExitCode : int {
    Ok = 0,
    Failure = 1,
    ConfigError = 2,
    Unsupported = 3,
    TooLarge = 4,
    IoError = 5,
};

[[nodiscard]] ExitCode exit_code_for(ErrorKind kind) noexcept;

} // namespace qchain
