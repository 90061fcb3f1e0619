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
#include <vector>

#include "qchain/config.hpp"
#include "qchain/hamiltonian.hpp"
#include "qchain/program.hpp"

namespace qchain {

struct TrotterParams {
    double total_time = 0.0;
    std::size_t num_steps = 1;

    [[nodiscard]] double step_size() const noexcept {
        return total_time / static_cast<double>(num_steps);
    }
};

/// One first-order product-formula step exp(-i c dt P) per term of
/// H.snapshot(t_eval), in snapshot order: bond terms become RAA(2 c dt), field
/// terms RA(2 c dt).
[[nodiscard]] Program trotter_step(const HeisenbergHamiltonian &h,
                                   double t_eval, double dt);

/// X on every spin-down site.
[[nodiscard]] Program state_preparation(const std::vector<SpinState> &spins);

/// State preparation followed by `k` steps; step j (1-based) samples the
/// Hamiltonian at the midpoint (j - 1/2) dt. Throws InvalidArgument when
/// k > num_steps.
[[nodiscard]] Program build_evolution_program(const HeisenbergHamiltonian &h,
                                              const TrotterParams &params,
                                              std::size_t k,
                                              const std::vector<SpinState> &spins);

} // namespace qchain
