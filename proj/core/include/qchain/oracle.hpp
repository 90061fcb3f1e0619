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

#include "qchain/hamiltonian.hpp"
#include "qchain/pauli.hpp"
#include "qchain/statevector.hpp"

namespace qchain {

/// Largest chain the dense reference solvers accept.
inline constexpr std::size_t kMaxOracleQubits = 10;

struct Eigenpair {
    double energy = 0.0;
    Statevector state{0};
};

/// Lowest eigenpair of dense_matrix(terms, n). The phase of the state is
/// fixed so that its largest-magnitude amplitude is real and positive.
/// Throws TooLarge when n > 10.
[[nodiscard]] Eigenpair ground_state(const std::vector<PauliTerm> &terms,
                                     std::size_t n);

/// Full spectrum in ascending order.
[[nodiscard]] std::vector<double> spectrum(const std::vector<PauliTerm> &terms,
                                           std::size_t n);

/// exp(-i H t)|initial>. A time-independent H is propagated through its
/// eigendecomposition; otherwise [0, t] is split into `substeps` intervals
/// and each one applies exp(-i H(t_mid) dt) exactly.
[[nodiscard]] Statevector evolve_exact(const HeisenbergHamiltonian &h, double t,
                                       const Statevector &initial,
                                       std::size_t substeps = 100);

/// States at t = k * total / steps for k = 0..steps, sharing one
/// decomposition (time-independent H) or one running product (midpoint
/// intervals, `substeps_per_step` per output step).
[[nodiscard]] std::vector<Statevector>
evolve_exact_series(const HeisenbergHamiltonian &h, double total,
                    std::size_t steps, const Statevector &initial,
                    std::size_t substeps_per_step = 10);

struct ImaginaryTimeState {
    Statevector state{0};
    double energy = 0.0;
};

/// exp(-beta H)|initial> / norm and its energy. Throws ZeroOverlap when the
/// norm underflows (initial state orthogonal to the retained spectrum).
[[nodiscard]] ImaginaryTimeState
evolve_imaginary_exact(const std::vector<PauliTerm> &terms, double beta,
                       const Statevector &initial);

} // namespace qchain
