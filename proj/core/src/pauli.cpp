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

#include "qchain/pauli.hpp"

#include <bit>
#include <sstream>

#include "qchain/error.hpp"

namespace qchain {

char axis_char(Axis axis) noexcept {
    switch (axis) {
    case Axis::X:
        return 'x';
    case Axis::Y:
        return 'y';
    case Axis::Z:
        return 'z';
    }
    return '?';
}

std::string to_string(const PauliTerm &term) {
    std::ostringstream out;
    out << term.coefficient;
    for (const auto &f : term.factors) {
        out << " " << static_cast<char>(axis_char(f.axis) - 'a' + 'A')
            << f.qubit;
    }
    return out.str();
}

std::size_t PauliString::weight() const noexcept {
    return static_cast<std::size_t>(std::popcount(x | z));
}

char PauliString::op(std::size_t qubit) const noexcept {
    const bool xb = (x >> qubit) & 1U;
    const bool zb = (z >> qubit) & 1U;
    if (xb && zb) {
        return 'Y';
    }
    if (xb) {
        return 'X';
    }
    if (zb) {
        return 'Z';
    }
    return 'I';
}

void PauliString::set(std::size_t qubit, Axis axis) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    x &= ~bit;
    z &= ~bit;
    if (axis == Axis::X || axis == Axis::Y) {
        x |= bit;
    }
    if (axis == Axis::Z || axis == Axis::Y) {
        z |= bit;
    }
}

PauliString
PauliString::from_factors(const std::vector<PauliFactor> &factors) {
    PauliString p;
    for (const auto &f : factors) {
        if (f.qubit >= 64) {
            throw Error(ErrorKind::TooLarge,
                        "Pauli strings support at most 64 qubits");
        }
        if (p.support() >> f.qubit & 1U) {
            throw Error(ErrorKind::InvalidArgument,
                        "Pauli term acts twice on qubit " +
                            std::to_string(f.qubit));
        }
        p.set(f.qubit, f.axis);
    }
    return p;
}

std::vector<PauliFactor> PauliString::factors() const {
    std::vector<PauliFactor> out;
    std::uint64_t s = support();
    while (s != 0) {
        const auto q = static_cast<std::size_t>(std::countr_zero(s));
        s &= s - 1;
        const char c = op(q);
        out.push_back({q, c == 'X' ? Axis::X : (c == 'Y' ? Axis::Y : Axis::Z)});
    }
    return out;
}

PauliProduct multiply(const PauliString &a, const PauliString &b) noexcept {
    // Per qubit, encode I=0, X=1, Y=2, Z=3. For distinct non-identity
    // operands, (A,B) cyclic in (X,Y,Z) gives +i, anti-cyclic gives -i.
    unsigned phase = 0;
    std::uint64_t s = a.support() & b.support();
    while (s != 0) {
        const auto q = static_cast<std::size_t>(std::countr_zero(s));
        s &= s - 1;
        const char pa = a.op(q);
        const char pb = b.op(q);
        if (pa == pb) {
            continue;
        }
        const bool cyclic = (pa == 'X' && pb == 'Y') ||
                            (pa == 'Y' && pb == 'Z') ||
                            (pa == 'Z' && pb == 'X');
        phase += cyclic ? 1U : 3U;
    }
    return {phase % 4U, PauliString{a.x ^ b.x, a.z ^ b.z}};
}

std::complex<double> i_power(unsigned k) noexcept {
    switch (k % 4U) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

std::vector<PauliString> pauli_basis(const std::vector<std::size_t> &qubits) {
    const std::size_t k = qubits.size();
    if (k > 12) {
        throw Error(ErrorKind::TooLarge, "Pauli basis over more than 12 qubits");
    }
    const std::size_t count = std::size_t{1} << (2 * k);
    std::vector<PauliString> basis;
    basis.reserve(count - 1);
    for (std::size_t code = 1; code < count; ++code) {
        PauliString p;
        for (std::size_t d = 0; d < k; ++d) {
            const std::size_t digit = (code >> (2 * (k - 1 - d))) & 3U;
            if (digit == 1) {
                p.set(qubits[d], Axis::X);
            } else if (digit == 2) {
                p.set(qubits[d], Axis::Y);
            } else if (digit == 3) {
                p.set(qubits[d], Axis::Z);
            }
        }
        basis.push_back(p);
    }
    return basis;
}

} // namespace qchain
