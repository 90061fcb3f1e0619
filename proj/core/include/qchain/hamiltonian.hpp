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
#include <vector>

#include <Eigen/Dense>

#include "qchain/pauli.hpp"
#include "qchain/schedule.hpp"

namespace qchain {

/// Open nearest-neighbour chain
///
///   H(t) = sum_a sum_{i<n-1} J^a_i(t) s^a_i s^a_{i+1} + sum_a sum_i h^a_i(t) s^a_i
///
/// with 0-based qubit indices. Bond i couples qubits i and i+1.
class HeisenbergHamiltonian {
  public:
    explicit HeisenbergHamiltonian(std::size_t num_spins);

    [[nodiscard]] std::size_t num_spins() const noexcept { return n_; }
    [[nodiscard]] std::size_t num_bonds() const noexcept {
        return n_ > 0 ? n_ - 1 : 0;
    }

    void set_bonds(Axis axis, std::vector<Coefficient> coefficients);
    void set_fields(Axis axis, std::vector<Coefficient> coefficients);
    void set_bond(Axis axis, std::size_t bond, Coefficient c);
    void set_field(Axis axis, std::size_t site, Coefficient c);

    [[nodiscard]] const Coefficient &bond(Axis axis, std::size_t i) const;
    [[nodiscard]] const Coefficient &field(Axis axis, std::size_t i) const;

    [[nodiscard]] bool is_time_independent() const noexcept;

    /// Number of coefficient functions that are not identically zero.
    [[nodiscard]] std::size_t active_term_count() const noexcept;

    /// Terms at time t in the fixed order: x-bonds, y-bonds, z-bonds (each
    /// left to right), then x-, y-, z-fields. Zero coefficients are dropped.
    [[nodiscard]] std::vector<PauliTerm> snapshot(double t) const;

    /// Uniform transverse-field Ising chain J sum Z_i Z_{i+1} + h sum X_i.
    [[nodiscard]] static HeisenbergHamiltonian tfim(std::size_t n, double j_z,
                                                    double h_x);

  private:
    std::size_t n_;
    std::array<std::vector<Coefficient>, 3> bonds_;
    std::array<std::vector<Coefficient>, 3> fields_;
};

/// Largest chain handled by dense_matrix.
inline constexpr std::size_t kMaxDenseQubits = 12;

/// sum_T c_T (tensor product of the factors of T, identity elsewhere). Qubit 0
/// is the most significant tensor factor. Throws TooLarge when n > 12.
[[nodiscard]] Eigen::MatrixXcd dense_matrix(const std::vector<PauliTerm> &terms,
                                            std::size_t n);

} // namespace qchain
