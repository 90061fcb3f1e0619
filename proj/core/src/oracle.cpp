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

#include "qchain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "qchain/error.hpp"

namespace qchain {

namespace {

void check_size(std::size_t n) {
    if (n > kMaxOracleQubits) {
        throw Error(ErrorKind::TooLarge,
                    "exact reference limited to " +
                        std::to_string(kMaxOracleQubits) + " spins, got " +
                        std::to_string(n));
    }
}

Eigen::VectorXcd to_eigen(const Statevector &s) {
    const auto amps = s.amplitudes();
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = amps[i];
    }
    return v;
}

Statevector from_eigen(const Eigen::VectorXcd &v) {
    std::vector<Amplitude> amps(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        amps[static_cast<std::size_t>(i)] = v(i);
    }
    return Statevector::from_amplitudes(std::move(amps));
}

using Solver = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>;

Solver diagonalize(const std::vector<PauliTerm> &terms, std::size_t n) {
    check_size(n);
    Solver eig(dense_matrix(terms, n));
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorKind::SingularSystem, "dense eigendecomposition failed");
    }
    return eig;
}

/// V diag(exp(-i w t)) V^dagger v.
Eigen::VectorXcd propagate(const Solver &eig, double t, const Eigen::VectorXcd &v) {
    const Eigen::MatrixXcd &vecs = eig.eigenvectors();
    Eigen::VectorXcd c = vecs.adjoint() * v;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        c(i) *= std::polar(1.0, -eig.eigenvalues()(i) * t);
    }
    return vecs * c;
}

void check_initial(const HeisenbergHamiltonian &h, const Statevector &initial) {
    check_size(h.num_spins());
    if (initial.num_qubits() != h.num_spins()) {
        throw Error(ErrorKind::InvalidArgument,
                    "initial state size does not match the Hamiltonian");
    }
}

} // namespace

Eigenpair ground_state(const std::vector<PauliTerm> &terms, std::size_t n) {
    const Solver eig = diagonalize(terms, n);
    Eigen::VectorXcd v = eig.eigenvectors().col(0);
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    v *= std::conj(v(k)) / std::abs(v(k));
    return {eig.eigenvalues()(0), from_eigen(v)};
}

std::vector<double> spectrum(const std::vector<PauliTerm> &terms, std::size_t n) {
    const Solver eig = diagonalize(terms, n);
    const Eigen::VectorXd &w = eig.eigenvalues();
    return {w.data(), w.data() + w.size()};
}

Statevector evolve_exact(const HeisenbergHamiltonian &h, double t,
                         const Statevector &initial, std::size_t substeps) {
    check_initial(h, initial);
    if (t == 0.0) {
        return initial;
    }
    const std::size_t n = h.num_spins();
    if (h.is_time_independent()) {
        return from_eigen(propagate(diagonalize(h.snapshot(0.0), n), t,
                                    to_eigen(initial)));
    }
    if (substeps == 0) {
        throw Error(ErrorKind::InvalidArgument, "substeps must be >= 1");
    }
    const double dt = t / static_cast<double>(substeps);
    Eigen::VectorXcd v = to_eigen(initial);
    for (std::size_t j = 0; j < substeps; ++j) {
        const double mid = (static_cast<double>(j) + 0.5) * dt;
        v = propagate(diagonalize(h.snapshot(mid), n), dt, v);
    }
    return from_eigen(v);
}

std::vector<Statevector> evolve_exact_series(const HeisenbergHamiltonian &h,
                                             double total, std::size_t steps,
                                             const Statevector &initial,
                                             std::size_t substeps_per_step) {
    check_initial(h, initial);
    if (steps == 0) {
        throw Error(ErrorKind::InvalidArgument, "steps must be >= 1");
    }
    const std::size_t n = h.num_spins();
    const double dt = total / static_cast<double>(steps);
    std::vector<Statevector> out;
    out.reserve(steps + 1);
    out.push_back(initial);
    const Eigen::VectorXcd v0 = to_eigen(initial);
    if (h.is_time_independent()) {
        const Solver eig = diagonalize(h.snapshot(0.0), n);
        for (std::size_t k = 1; k <= steps; ++k) {
            out.push_back(from_eigen(propagate(eig, dt * static_cast<double>(k), v0)));
        }
        return out;
    }
    if (substeps_per_step == 0) {
        throw Error(ErrorKind::InvalidArgument, "substeps must be >= 1");
    }
    const double sub = dt / static_cast<double>(substeps_per_step);
    Eigen::VectorXcd v = v0;
    for (std::size_t k = 0; k < steps; ++k) {
        for (std::size_t j = 0; j < substeps_per_step; ++j) {
            const double mid =
                dt * static_cast<double>(k) + (static_cast<double>(j) + 0.5) * sub;
            v = propagate(diagonalize(h.snapshot(mid), n), sub, v);
        }
        out.push_back(from_eigen(v));
    }
    return out;
}

ImaginaryTimeState evolve_imaginary_exact(const std::vector<PauliTerm> &terms,
                                          double beta,
                                          const Statevector &initial) {
    const std::size_t n = initial.num_qubits();
    if (!(beta >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "beta must be >= 0");
    }
    const Solver eig = diagonalize(terms, n);
    const Eigen::VectorXd &w = eig.eigenvalues();
    const Eigen::MatrixXcd &vecs = eig.eigenvectors();
    Eigen::VectorXcd c = vecs.adjoint() * to_eigen(initial);
    // Shift by the ground energy so the weights stay in (0, 1].
    const double e0 = w(0);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        c(i) *= std::exp(-beta * (w(i) - e0));
    }
    const double norm = c.norm();
    if (!(norm > 1e-300)) {
        throw Error(ErrorKind::ZeroOverlap,
                    "initial state has no weight left after imaginary-time "
                    "propagation");
    }
    c /= norm;
    double energy = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        energy += std::norm(c(i)) * w(i);
    }
    return {from_eigen(vecs * c), energy};
}

} // namespace qchain
