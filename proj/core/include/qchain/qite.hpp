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

#include <Eigen/Dense>

#include "qchain/config.hpp"
#include "qchain/hamiltonian.hpp"
#include "qchain/pauli.hpp"
#include "qchain/program.hpp"
#include "qchain/statevector.hpp"

namespace qchain {

struct QiteParams {
    double dbeta = 0.1;
    std::size_t num_steps = 1;
    /// Extra sites on each side of a term's support included in its fitting
    /// domain (clipped to the chain).
    std::size_t domain_radius = 0;
    /// Tikhonov shift added to the diagonal of S.
    double regularization = 1e-6;
    /// 0: exact expectation values. Otherwise every Pauli expectation used by
    /// a fit is estimated from this many samples.
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Result of fitting one imaginary-time step of one Hamiltonian term.
struct QiteFit {
    std::vector<PauliString> basis;
    Eigen::VectorXd coefficients; // a_I, one per basis string
    double residual_norm = 0.0;   // |S a - b|
    double normalization = 1.0;   // c = <(1 - dbeta h)^2>
    Program circuit;              // approximates exp(-i dbeta sum_I a_I s_I)
};

/// exp(-i theta/2 P) as gates: single-axis rotations for weight-1 strings,
/// RXX/RYY/RZZ for equal-axis pairs, otherwise basis change + CNOT ladder +
/// RZ on the last qubit of the support.
[[nodiscard]] Program pauli_rotation(const PauliString &p, double theta,
                                     std::size_t num_qubits);

/// Qubits of the fitting domain for `term`.
[[nodiscard]] std::vector<std::size_t>
fitting_domain(const PauliTerm &term, std::size_t num_qubits,
               std::size_t domain_radius);

/// Fits a unitary e^{-i dbeta A}, A = sum_I a_I s_I over the Pauli basis of
/// the term's domain, so that e^{-i dbeta A}|psi> best matches
/// e^{-dbeta h}|psi> / sqrt(c) to first order:
///
///   (S + delta I) a = b,  S_IJ = Re<s_I s_J>,  b_I = Im<s_I h> / sqrt(c),
///   c = 1 - 2 dbeta <h> + dbeta^2 <h^2>.
///
/// `stream` decorrelates the sampling seed between calls in shot mode.
/// Throws SingularSystem if the regularized solve fails.
[[nodiscard]] QiteFit fit_step_unitary(const Statevector &state,
                                       const PauliTerm &term,
                                       const QiteParams &params,
                                       std::uint64_t stream = 0);

struct QiteStepReport {
    std::size_t step = 0;   // 1-based
    double energy = 0.0;    // <H> after the step
    double energy_sigma = 0.0;
    std::vector<Eigen::VectorXd> coefficients; // per Hamiltonian term
    double residual_norm = 0.0;                // largest over the terms
    double normalization = 1.0;                // product over the terms
};

struct QiteResult {
    double initial_energy = 0.0;
    std::vector<QiteStepReport> reports;
    Program circuit; // state preparation followed by every fitted sub-circuit
    Statevector final_state{0};
};

/// Sequential QITE: each step fits and applies one sub-circuit per term of
/// H.snapshot(0) in snapshot order, then records <H>. Throws InvalidArgument
/// if H is time dependent.
[[nodiscard]] QiteResult run_qite(const HeisenbergHamiltonian &h,
                                  const QiteParams &params,
                                  const std::vector<SpinState> &initial_state);

} // namespace qchain
