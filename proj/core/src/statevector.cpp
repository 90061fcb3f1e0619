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

#include "qchain/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "qchain/error.hpp"

namespace qchain {

namespace {

// Plain complex product; avoids the libgcc NaN-recovery call in hot loops.
inline Amplitude mul(Amplitude a, Amplitude b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

std::size_t bit_of(std::size_t n, std::size_t qubit) {
    return std::size_t{1} << (n - 1 - qubit);
}

/// Maps a PauliString's qubit-indexed masks onto basis-index bit positions.
std::pair<std::size_t, std::size_t> index_masks(const PauliString &p,
                                                std::size_t n) {
    std::size_t x = 0;
    std::size_t z = 0;
    std::uint64_t s = p.support();
    while (s != 0) {
        const auto q = static_cast<std::size_t>(std::countr_zero(s));
        s &= s - 1;
        if (q >= n) {
            throw Error(ErrorKind::QubitOutOfRange,
                        "observable acts on qubit " + std::to_string(q) +
                            " of a " + std::to_string(n) + "-qubit state");
        }
        if ((p.x >> q) & 1U) {
            x |= bit_of(n, q);
        }
        if ((p.z >> q) & 1U) {
            z |= bit_of(n, q);
        }
    }
    return {x, z};
}

Amplitude raw_expectation(const Statevector &state, const PauliString &p) {
    const std::size_t n = state.num_qubits();
    const auto [xmask, zmask] = index_masks(p, n);
    const auto ycount = static_cast<unsigned>(std::popcount(p.x & p.z));
    const auto amps = state.amplitudes();
    Amplitude acc(0.0, 0.0);
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double sign = (std::popcount(k & zmask) & 1) != 0 ? -1.0 : 1.0;
        acc += mul(std::conj(amps[k ^ xmask]), amps[k]) * sign;
    }
    return acc * i_power(ycount);
}

} // namespace

Statevector::Statevector(std::size_t num_qubits, std::size_t max_qubits)
    : n_(num_qubits) {
    if (num_qubits > max_qubits) {
        throw Error(ErrorKind::TooLarge,
                    std::to_string(num_qubits) +
                        " qubits exceed the statevector limit of " +
                        std::to_string(max_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Amplitude(0.0, 0.0));
    amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::InvalidArgument,
                    "amplitude count must be a power of two");
    }
    Statevector s;
    s.n_ = static_cast<std::size_t>(std::countr_zero(dim));
    s.amps_ = std::move(amplitudes);
    return s;
}

Statevector Statevector::basis_state(std::size_t num_qubits, std::size_t index) {
    Statevector s(num_qubits);
    if (index >= s.dimension()) {
        throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

void Statevector::apply_one_qubit(std::size_t q, const Amplitude m[4]) {
    const std::size_t stride = bit_of(n_, q);
    const std::size_t dim = amps_.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Amplitude a0 = amps_[i];
            const Amplitude a1 = amps_[i + stride];
            amps_[i] = mul(m[0], a0) + mul(m[1], a1);
            amps_[i + stride] = mul(m[2], a0) + mul(m[3], a1);
        }
    }
}

void Statevector::apply_two_qubit(std::size_t q0, std::size_t q1,
                                  const Amplitude m[16]) {
    const std::size_t b0 = bit_of(n_, q0);
    const std::size_t b1 = bit_of(n_, q1);
    const std::size_t dim = amps_.size();
    const std::size_t lo = std::min(b0, b1);
    const std::size_t hi = std::max(b0, b1);
    // Enumerate indices with both target bits clear by inserting two zero bits.
    for (std::size_t j = 0; j < dim / 4; ++j) {
        std::size_t k = ((j & ~(lo - 1)) << 1) | (j & (lo - 1));
        k = ((k & ~(hi - 1)) << 1) | (k & (hi - 1));
        const std::size_t idx[4] = {k, k | b1, k | b0, k | b0 | b1};
        const Amplitude in[4] = {amps_[idx[0]], amps_[idx[1]], amps_[idx[2]],
                                 amps_[idx[3]]};
        for (std::size_t r = 0; r < 4; ++r) {
            amps_[idx[r]] = mul(m[4 * r], in[0]) + mul(m[4 * r + 1], in[1]) +
                            mul(m[4 * r + 2], in[2]) + mul(m[4 * r + 3], in[3]);
        }
    }
}

void Statevector::apply(const Gate &g) {
    for (std::size_t k = 0; k < g.arity(); ++k) {
        if (g.qubits[k] >= n_) {
            throw Error(ErrorKind::QubitOutOfRange,
                        "gate on qubit " + std::to_string(g.qubits[k]) +
                            " of a " + std::to_string(n_) + "-qubit state");
        }
    }
    const Eigen::MatrixXcd m = gate_matrix(g);
    if (g.arity() == 1) {
        const Amplitude mm[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
        apply_one_qubit(g.qubits[0], mm);
    } else {
        Amplitude mm[16];
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                mm[4 * r + c] = m(r, c);
            }
        }
        apply_two_qubit(g.qubits[0], g.qubits[1], mm);
    }
}

void Statevector::apply(const Program &p) {
    if (p.num_qubits() > n_) {
        throw Error(ErrorKind::QubitOutOfRange,
                    "program has more qubits than the state");
    }
    for (const auto &g : p.gates()) {
        apply(g);
    }
}

double Statevector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void Statevector::normalize() {
    const double norm = std::sqrt(norm_squared());
    if (!(norm > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero vector");
    }
    for (auto &a : amps_) {
        a /= norm;
    }
}

Amplitude Statevector::inner(const Statevector &other) const {
    if (other.dimension() != dimension()) {
        throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
    }
    Amplitude acc(0.0, 0.0);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        acc += std::conj(amps_[k]) * other.amps_[k];
    }
    return acc;
}

Statevector run_statevector(const Program &p, std::size_t max_qubits) {
    Statevector s(p.num_qubits(), max_qubits);
    s.apply(p);
    return s;
}

double expectation(const Statevector &state, const PauliString &p) {
    return raw_expectation(state, p).real();
}

double expectation(const Statevector &state,
                   const std::vector<PauliTerm> &observable) {
    double total = 0.0;
    for (const auto &term : observable) {
        if (term.factors.empty()) {
            total += term.coefficient;
            continue;
        }
        total += term.coefficient *
                 expectation(state, PauliString::from_factors(term.factors));
    }
    return total;
}

Amplitude product_expectation(const Statevector &state, const PauliString &a,
                              const PauliString &b) {
    const auto prod = multiply(a, b);
    return i_power(prod.phase) * raw_expectation(state, prod.result);
}

Counts sample_counts(const Statevector &state, std::uint64_t shots,
                     std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArgument, "shots must be >= 1");
    }
    const auto amps = state.amplitudes();
    std::vector<double> cumulative(amps.size());
    double running = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        running += std::norm(amps[k]);
        cumulative[k] = running;
    }
    std::vector<std::uint64_t> hits(amps.size(), 0);
    std::mt19937_64 gen(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * running;
        // upper_bound never lands on a zero-probability entry.
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto k = static_cast<std::size_t>(it - cumulative.begin());
        if (it == cumulative.end()) {
            k = amps.size() - 1;
            while (k > 0 && std::norm(amps[k]) == 0.0) {
                --k;
            }
        }
        ++hits[k];
    }
    Counts counts;
    const std::size_t n = state.num_qubits();
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (hits[k] == 0) {
            continue;
        }
        std::string bits(n, '0');
        for (std::size_t q = 0; q < n; ++q) {
            if (k & bit_of(n, q)) {
                bits[q] = '1';
            }
        }
        counts.emplace(std::move(bits), hits[k]);
    }
    return counts;
}

double estimate_observable_from_counts(const Counts &counts,
                                       const std::vector<PauliTerm> &observable) {
    for (const auto &term : observable) {
        for (const auto &f : term.factors) {
            if (f.axis != Axis::Z) {
                throw Error(ErrorKind::BasisMismatch,
                            "counts only determine Z-diagonal observables; "
                            "rotate the measurement basis first");
            }
        }
    }
    std::uint64_t total = 0;
    double acc = 0.0;
    for (const auto &[bits, count] : counts) {
        double value = 0.0;
        for (const auto &term : observable) {
            double v = term.coefficient;
            for (const auto &f : term.factors) {
                if (f.qubit >= bits.size()) {
                    throw Error(ErrorKind::QubitOutOfRange,
                                "observable qubit beyond outcome length");
                }
                if (bits[f.qubit] == '1') {
                    v = -v;
                }
            }
            value += v;
        }
        acc += value * static_cast<double>(count);
        total += count;
    }
    if (total == 0) {
        throw Error(ErrorKind::InvalidArgument, "empty counts");
    }
    return acc / static_cast<double>(total);
}

} // namespace qchain
