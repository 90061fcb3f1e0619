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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qchain/gate.hpp"

namespace qchain {

/// Backend-agnostic ordered gate list. Gates are validated on insertion, so a
/// Program is always well formed.
class Program {
  public:
    Program() = default;
    explicit Program(std::size_t num_qubits);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::span<const Gate> gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] const Gate &operator[](std::size_t i) const { return gates_[i]; }

    /// Terminal measurement of every qubit in the computational basis.
    [[nodiscard]] bool measured() const noexcept { return measured_; }
    void set_measured(bool m) noexcept { measured_ = m; }

    /// Throws QubitOutOfRange or InvalidArgument for malformed gates.
    void append(const Gate &g);
    void append(const Program &other);

    friend bool operator==(const Program &, const Program &) = default;

  private:
    std::size_t n_ = 0;
    std::vector<Gate> gates_;
    bool measured_ = false;
};

/// Gates a hardware target executes directly: RZ, RX, H, CNOT.
[[nodiscard]] bool is_native(GateKind kind) noexcept;

/// Rewrites every gate into the native set. Equal unitary up to global phase.
///   RZZ(t)(a,b) -> CNOT(a,b) RZ(t)(b) CNOT(a,b)
///   RXX         -> H on both, RZZ, H on both
///   RYY         -> RX(pi/2) on both, RZZ, RX(-pi/2) on both
///   RY(t)       -> RX(pi/2) RZ(t) RX(-pi/2)
///   X           -> RX(pi)
[[nodiscard]] Program lower_to_native(const Program &p);

inline constexpr std::size_t kMaxUnitaryQubits = 10;

/// Full 2^n x 2^n matrix, product of gate matrices in application order.
/// Independent of the statevector kernels: gates are embedded by index
/// arithmetic on the full matrix. Throws TooLarge when n > 10.
[[nodiscard]] Eigen::MatrixXcd unitary_of(const Program &p);

/// max |a - e^{i phi} b| where phi aligns the phase of b to a at the entry of
/// largest magnitude in a.
[[nodiscard]] double phase_aligned_distance(const Eigen::MatrixXcd &a,
                                            const Eigen::MatrixXcd &b);

} // namespace qchain
