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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qchain/gate.hpp"
#include "qchain/pauli.hpp"
#include "qchain/program.hpp"

namespace qchain {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 24;

/// 2^n amplitudes. Basis index bit (n-1-q) holds qubit q, so qubit 0 is the
/// most significant bit and |0> is spin up.
class Statevector {
  public:
    /// |0...0>.
    explicit Statevector(std::size_t num_qubits,
                         std::size_t max_qubits = kDefaultMaxQubits);

    /// Takes ownership of `amplitudes`; the size must be a power of two. The
    /// vector is used as given (callers normalize if needed).
    [[nodiscard]] static Statevector
    from_amplitudes(std::vector<Amplitude> amplitudes);

    [[nodiscard]] static Statevector basis_state(std::size_t num_qubits,
                                                 std::size_t index);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }

    /// In-place amplitude update; no matrices of size 2^n are formed.
    void apply(const Gate &g);
    void apply(const Program &p);

    [[nodiscard]] double norm_squared() const noexcept;
    void normalize();

    /// <this|other>.
    [[nodiscard]] Amplitude inner(const Statevector &other) const;

  private:
    Statevector() = default;

    void apply_one_qubit(std::size_t q, const Amplitude m[4]);
    void apply_two_qubit(std::size_t q0, std::size_t q1, const Amplitude m[16]);

    std::size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

/// U_p |0...0>. Throws TooLarge when p.num_qubits() > max_qubits.
[[nodiscard]] Statevector
run_statevector(const Program &p, std::size_t max_qubits = kDefaultMaxQubits);

/// <psi|P|psi> for a bare Pauli string (real up to rounding).
[[nodiscard]] double expectation(const Statevector &state, const PauliString &p);

/// <psi|sum_T c_T T|psi>, exact.
[[nodiscard]] double expectation(const Statevector &state,
                                 const std::vector<PauliTerm> &observable);

/// <psi| A B |psi> for Pauli strings A, B (complex in general).
[[nodiscard]] Amplitude product_expectation(const Statevector &state,
                                            const PauliString &a,
                                            const PauliString &b);

/// Outcome bitstring (qubit 0 first) -> number of occurrences.
using Counts = std::map<std::string, std::uint64_t>;

/// i.i.d. draws from |amp|^2; identical (state, shots, seed) give identical
/// counts.
[[nodiscard]] Counts sample_counts(const Statevector &state,
                                   std::uint64_t shots, std::uint64_t seed);

/// Monte-Carlo estimate of a Z-diagonal observable. Throws BasisMismatch if a
/// term contains an X or Y factor.
[[nodiscard]] double
estimate_observable_from_counts(const Counts &counts,
                                const std::vector<PauliTerm> &observable);

} // namespace qchain
