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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qchain/hamiltonian.hpp"
#include "qchain/pauli.hpp"
#include "qchain/schedule.hpp"

namespace qchain {

enum class EvolutionMode { RealTime, ImaginaryTime };
enum class BackendMode { StatevectorSimulator, ExportOnly };
enum class OptimizerLevel { None, Peephole };
enum class SpinState : std::uint8_t { Up, Down };

enum class ObservableKind { ExcitationDisplacement, Energy, Magnetization };

struct ObservableSpec {
    ObservableKind kind = ObservableKind::Magnetization;
    Axis axis = Axis::Z; // only meaningful for Magnetization

    friend bool operator==(const ObservableSpec &,
                           const ObservableSpec &) = default;
};

[[nodiscard]] std::string to_string(const ObservableSpec &obs);

/// Initial product state. Presets keep their name so that a parsed file
/// serializes back to the same text.
struct InitialState {
    enum class Preset { AllUp, FlipFirst, Explicit };
    Preset preset = Preset::AllUp;
    std::vector<SpinState> spins; // used when preset == Explicit

    [[nodiscard]] std::vector<SpinState> expand(std::size_t num_spins) const;

    friend bool operator==(const InitialState &,
                           const InitialState &) = default;
};

/// Everything an input file can say. Index 0/1/2 of `couplings` and `fields`
/// are the x/y/z axes.
struct SimulationConfig {
    std::size_t num_spins = 3;
    std::array<CoefficientSchedule, 3> couplings{};
    std::array<CoefficientSchedule, 3> fields{};
    InitialState initial_state;
    EvolutionMode mode = EvolutionMode::RealTime;
    double total_time = 1.0;
    std::size_t num_steps = 10;
    BackendMode backend_mode = BackendMode::StatevectorSimulator;
    std::uint64_t shots = 0;
    ObservableSpec observable;
    OptimizerLevel optimizer_level = OptimizerLevel::Peephole;
    bool constant_depth = false;
    std::optional<std::uint64_t> rng_seed;
    std::string output_dir; // empty: not set in the file
    std::size_t qite_domain_radius = 0;
    double qite_regularization = 1e-6;

    [[nodiscard]] double step_size() const noexcept {
        return total_time / static_cast<double>(num_steps);
    }

    friend bool operator==(const SimulationConfig &,
                           const SimulationConfig &) = default;
};

/// Parses `key: value` lines; `#` starts a comment. Throws ParseError with the
/// offending line number.
[[nodiscard]] SimulationConfig parse_input(std::string_view text);

/// Canonical text form; parse_input(serialize(c)) == c.
[[nodiscard]] std::string serialize(const SimulationConfig &config);

/// Checks cross-field invariants; throws ParseError (line 0) on violation.
void validate(const SimulationConfig &config);

/// Resolves every schedule into per-bond / per-site coefficient functions.
/// Random draws are fixed here. A random schedule without its own seed uses
/// a stream derived from rng_seed (0 when unset) and its key, so that e.g.
/// J_x and J_y draw independent values.
[[nodiscard]] HeisenbergHamiltonian
build_hamiltonian(const SimulationConfig &config);

/// Names accepted in input files, in serialization order.
[[nodiscard]] const std::vector<std::string_view> &known_keys();

} // namespace qchain
