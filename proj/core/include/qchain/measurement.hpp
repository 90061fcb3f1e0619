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
#include <vector>

#include "qchain/pauli.hpp"
#include "qchain/program.hpp"
#include "qchain/statevector.hpp"

namespace qchain {

/// Terms that can share one measurement circuit: on every qubit they agree on
/// the measured axis (qubit-wise commuting).
struct MeasurementGroup {
    PauliString basis; // axis measured on each qubit of the group
    std::vector<std::size_t> terms; // indices into the observable
};

/// Greedy first-fit grouping in term order. Identity terms belong to no group.
[[nodiscard]] std::vector<MeasurementGroup>
group_qubitwise_commuting(const std::vector<PauliTerm> &observable);

/// Gates rotating `basis` onto Z: H for X, RX(pi/2) for Y, nothing for Z.
[[nodiscard]] Program basis_rotation(const PauliString &basis,
                                     std::size_t num_qubits);

/// `prep` followed by the basis rotation, flagged for terminal measurement.
[[nodiscard]] Program measurement_circuit(const Program &prep,
                                          const PauliString &basis);

struct ShotEstimate {
    double value = 0.0;
    double sigma = 0.0; // standard error of `value`
};

/// Estimates <obs> from `shots` samples per measurement group. Group g uses
/// seed mix(seed, g). Identity terms contribute exactly.
[[nodiscard]] ShotEstimate
estimate_with_shots(const Statevector &state,
                    const std::vector<PauliTerm> &observable,
                    std::uint64_t shots, std::uint64_t seed);

/// Seed derivation shared by all shot-based estimators.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed,
                                     std::uint64_t stream) noexcept;

} // namespace qchain
