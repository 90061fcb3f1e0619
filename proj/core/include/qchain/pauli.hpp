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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qchain {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};

[[nodiscard]] char axis_char(Axis axis) noexcept;

/// Qubit indices are 0-based: chain site i (1-based) lives on qubit i-1, and
/// qubit 0 is the most significant bit of a basis-state index.
struct PauliFactor {
    std::size_t qubit;
    Axis axis;

    friend bool operator==(const PauliFactor &, const PauliFactor &) = default;
};

/// coefficient * (product of factors). An empty factor list is the identity.
struct PauliTerm {
    double coefficient = 0.0;
    std::vector<PauliFactor> factors;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

[[nodiscard]] std::string to_string(const PauliTerm &term);

/// Tensor product of single-qubit Paulis in symplectic form. Bit q of `x`/`z`
/// refers to qubit q; X = (1,0), Z = (0,1), Y = (1,1). Supports up to 64
/// qubits.
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    [[nodiscard]] bool is_identity() const noexcept { return (x | z) == 0; }
    [[nodiscard]] std::uint64_t support() const noexcept { return x | z; }
    [[nodiscard]] std::size_t weight() const noexcept;
    /// 'I', 'X', 'Y' or 'Z' on `qubit`.
    [[nodiscard]] char op(std::size_t qubit) const noexcept;
    void set(std::size_t qubit, Axis axis) noexcept;

    [[nodiscard]] static PauliString from_factors(
        const std::vector<PauliFactor> &factors);
    [[nodiscard]] std::vector<PauliFactor> factors() const;

    friend bool operator==(const PauliString &,
                           const PauliString &) = default;
    friend auto operator<=>(const PauliString &,
                            const PauliString &) = default;
};

/// a * b = i^phase * result.
struct PauliProduct {
    unsigned phase; // power of i, in [0, 4)
    PauliString result;
};

[[nodiscard]] PauliProduct multiply(const PauliString &a,
                                    const PauliString &b) noexcept;

[[nodiscard]] std::complex<double> i_power(unsigned k) noexcept;

/// All 4^k - 1 non-identity Pauli strings supported on `qubits`, enumerated in
/// base-4 order with the first listed qubit as the most significant digit.
[[nodiscard]] std::vector<PauliString>
pauli_basis(const std::vector<std::size_t> &qubits);

} // namespace qchain
