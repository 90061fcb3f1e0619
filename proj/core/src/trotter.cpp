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

#include "qchain/trotter.hpp"

#include <string>

#include "qchain/error.hpp"

namespace qchain {

Program trotter_step(const HeisenbergHamiltonian &h, double t_eval, double dt) {
    if (!(dt > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "Trotter step size must be > 0");
    }
    Program p(h.num_spins());
    for (const auto &term : h.snapshot(t_eval)) {
        const double angle = 2.0 * term.coefficient * dt;
        const auto &f = term.factors;
        if (f.size() == 1) {
            p.append(Gate::rotation(f[0].axis, f[0].qubit, angle));
        } else {
            p.append(Gate::pair_rotation(f[0].axis, f[0].qubit, f[1].qubit,
                                         angle));
        }
    }
    return p;
}

Program state_preparation(const std::vector<SpinState> &spins) {
    Program p(spins.size());
    for (std::size_t q = 0; q < spins.size(); ++q) {
        if (spins[q] == SpinState::Down) {
            p.append(Gate::x(q));
        }
    }
    return p;
}

Program build_evolution_program(const HeisenbergHamiltonian &h,
                                const TrotterParams &params, std::size_t k,
                                const std::vector<SpinState> &spins) {
    if (spins.size() != h.num_spins()) {
        throw Error(ErrorKind::InvalidArgument,
                    "initial state has " + std::to_string(spins.size()) +
                        " spins, Hamiltonian has " +
                        std::to_string(h.num_spins()));
    }
    if (params.num_steps == 0) {
        throw Error(ErrorKind::InvalidArgument, "num_steps must be >= 1");
    }
    if (k > params.num_steps) {
        throw Error(ErrorKind::InvalidArgument,
                    "step " + std::to_string(k) + " beyond num_steps " +
                        std::to_string(params.num_steps));
    }
    Program p = state_preparation(spins);
    if (k == 0) {
        return p;
    }
    const double dt = params.step_size();
    if (!(dt > 0.0)) {
        // Zero total time: every step is the identity.
        return p;
    }
    for (std::size_t j = 1; j <= k; ++j) {
        const double t_mid = (static_cast<double>(j) - 0.5) * dt;
        p.append(trotter_step(h, t_mid, dt));
    }
    return p;
}

} // namespace qchain
