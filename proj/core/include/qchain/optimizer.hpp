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

#include "qchain/program.hpp"

namespace qchain {

/// Rotations whose angle is within this distance of a multiple of 2 pi are
/// removed (identity up to global phase).
inline constexpr double kZeroAngleTolerance = 1e-12;

struct OptimizerStats {
    std::size_t merged_rotations = 0;
    std::size_t dropped_rotations = 0;
    std::size_t cancelled_pairs = 0;
    std::size_t passes = 0;
};

/// Peephole minimization run to a fixed point. Two gates are adjacent when no
/// gate between them touches any of their qubits. Rules:
///   - adjacent same-axis rotations on the same operands merge;
///   - rotations by a multiple of 2 pi are dropped;
///   - adjacent identical H, X or CNOT pairs cancel.
/// The gate count never increases and the unitary is unchanged up to global
/// phase.
[[nodiscard]] Program optimize(const Program &p,
                               OptimizerStats *stats = nullptr);

} // namespace qchain
