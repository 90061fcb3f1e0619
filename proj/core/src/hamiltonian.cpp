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

#include "qchain/hamiltonian.hpp"

#include <complex>
#include <string>

#include "qchain/error.hpp"

namespace qchain {

namespace {

std::size_t axis_index(Axis a) { return static_cast<std::size_t>(a); }

Eigen::Matrix2cd pauli_matrix(Axis axis) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    switch (axis) {
    case Axis::X:
        m << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
        break;
    case Axis::Y:
        m << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
        break;
    case Axis::Z:
        m << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
        break;
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

} // namespace

HeisenbergHamiltonian::HeisenbergHamiltonian(std::size_t num_spins)
    : n_(num_spins) {
    if (num_spins == 0) {
        throw Error(ErrorKind::ValueOutOfRange, "num_spins must be >= 1");
    }
    for (auto &b : bonds_) {
        b.assign(num_bonds(), Coefficient::constant(0.0));
    }
    for (auto &f : fields_) {
        f.assign(n_, Coefficient::constant(0.0));
    }
}

void HeisenbergHamiltonian::set_bonds(Axis axis,
                                      std::vector<Coefficient> coefficients) {
    if (coefficients.size() != num_bonds()) {
        throw Error(ErrorKind::ConflictingKeys,
                    "expected " + std::to_string(num_bonds()) +
                        " bond coefficients, got " +
                        std::to_string(coefficients.size()));
    }
    bonds_[axis_index(axis)] = std::move(coefficients);
}

void HeisenbergHamiltonian::set_fields(Axis axis,
                                       std::vector<Coefficient> coefficients) {
    if (coefficients.size() != n_) {
        throw Error(ErrorKind::ConflictingKeys,
                    "expected " + std::to_string(n_) +
                        " field coefficients, got " +
                        std::to_string(coefficients.size()));
    }
    fields_[axis_index(axis)] = std::move(coefficients);
}

void HeisenbergHamiltonian::set_bond(Axis axis, std::size_t bond,
                                     Coefficient c) {
    if (bond >= num_bonds()) {
        throw Error(ErrorKind::ValueOutOfRange,
                    "bond index " + std::to_string(bond) + " out of range");
    }
    bonds_[axis_index(axis)][bond] = c;
}

void HeisenbergHamiltonian::set_field(Axis axis, std::size_t site,
                                      Coefficient c) {
    if (site >= n_) {
        throw Error(ErrorKind::ValueOutOfRange,
                    "site index " + std::to_string(site) + " out of range");
    }
    fields_[axis_index(axis)][site] = c;
}

const Coefficient &HeisenbergHamiltonian::bond(Axis axis, std::size_t i) const {
    return bonds_[axis_index(axis)].at(i);
}

const Coefficient &HeisenbergHamiltonian::field(Axis axis,
                                                std::size_t i) const {
    return fields_[axis_index(axis)].at(i);
}

bool HeisenbergHamiltonian::is_time_independent() const noexcept {
    for (std::size_t a = 0; a < 3; ++a) {
        for (const auto &c : bonds_[a]) {
            if (!c.is_time_independent()) {
                return false;
            }
        }
        for (const auto &c : fields_[a]) {
            if (!c.is_time_independent()) {
                return false;
            }
        }
    }
    return true;
}

std::size_t HeisenbergHamiltonian::active_term_count() const noexcept {
    std::size_t count = 0;
    for (std::size_t a = 0; a < 3; ++a) {
        for (const auto &c : bonds_[a]) {
            count += c.is_zero() ? 0 : 1;
        }
        for (const auto &c : fields_[a]) {
            count += c.is_zero() ? 0 : 1;
        }
    }
    return count;
}

std::vector<PauliTerm> HeisenbergHamiltonian::snapshot(double t) const {
    std::vector<PauliTerm> terms;
    for (Axis axis : kAxes) {
        const auto &bonds = bonds_[axis_index(axis)];
        for (std::size_t i = 0; i < bonds.size(); ++i) {
            const double c = bonds[i].at(t);
            if (c != 0.0) {
                terms.push_back({c, {{i, axis}, {i + 1, axis}}});
            }
        }
    }
    for (Axis axis : kAxes) {
        const auto &fields = fields_[axis_index(axis)];
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const double c = fields[i].at(t);
            if (c != 0.0) {
                terms.push_back({c, {{i, axis}}});
            }
        }
    }
    return terms;
}

HeisenbergHamiltonian HeisenbergHamiltonian::tfim(std::size_t n, double j_z,
                                                  double h_x) {
    HeisenbergHamiltonian h(n);
    h.set_bonds(Axis::Z,
                std::vector<Coefficient>(h.num_bonds(),
                                         Coefficient::constant(j_z)));
    h.set_fields(Axis::X,
                 std::vector<Coefficient>(n, Coefficient::constant(h_x)));
    return h;
}

Eigen::MatrixXcd dense_matrix(const std::vector<PauliTerm> &terms,
                              std::size_t n) {
    if (n > kMaxDenseQubits) {
        throw Error(ErrorKind::TooLarge,
                    "dense matrix requested for " + std::to_string(n) +
                        " qubits (limit " + std::to_string(kMaxDenseQubits) +
                        ")");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    for (const auto &term : terms) {
        std::vector<Eigen::Matrix2cd> local(n, id);
        std::vector<bool> used(n, false);
        for (const auto &f : term.factors) {
            if (f.qubit >= n) {
                throw Error(ErrorKind::QubitOutOfRange,
                            "term acts on qubit " + std::to_string(f.qubit) +
                                " of a " + std::to_string(n) + "-qubit chain");
            }
            if (used[f.qubit]) {
                throw Error(ErrorKind::InvalidArgument,
                            "term acts twice on qubit " +
                                std::to_string(f.qubit));
            }
            used[f.qubit] = true;
            local[f.qubit] = pauli_matrix(f.axis);
        }
        Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
        for (std::size_t q = 0; q < n; ++q) {
            op = kron(op, local[q]);
        }
        h += term.coefficient * op;
    }
    return h;
}

} // namespace qchain
