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

// Reference helpers shared by the test binaries. Everything here is written
// independently of the library kernels: Pauli operators come from explicit
// Kronecker products and propagators from Eigen's matrix exponential.

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qchain/pauli.hpp"
#include "qchain/program.hpp"
#include "qchain/statevector.hpp"

namespace testing {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(char c) {
    Mat m(2, 2);
    switch (c) {
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, cd(0, -1), cd(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        m = Mat::Identity(2, 2);
    }
    return m;
}

/// Operator for a label such as "XIZ" (leftmost character = qubit 0).
inline Mat pauli_op(const std::string &label) {
    Mat m = Mat::Identity(1, 1);
    for (char c : label) {
        Mat next = Eigen::kroneckerProduct(m, pauli(c)).eval();
        m = next;
    }
    return m;
}

inline std::string label_of(const qchain::PauliTerm &t, std::size_t n) {
    std::string s(n, 'I');
    for (const auto &f : t.factors) {
        s[f.qubit] = static_cast<char>(std::toupper(qchain::axis_char(f.axis)));
    }
    return s;
}

inline Mat operator_of(const std::vector<qchain::PauliTerm> &terms,
                       std::size_t n) {
    const auto dim = static_cast<Eigen::Index>(1ULL << n);
    Mat m = Mat::Zero(dim, dim);
    for (const auto &t : terms) {
        m += t.coefficient * pauli_op(label_of(t, n));
    }
    return m;
}

inline Vec to_vec(const qchain::Statevector &s) {
    Vec v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline qchain::Statevector from_vec(const Vec &v) {
    std::vector<qchain::Amplitude> a(v.data(), v.data() + v.size());
    return qchain::Statevector::from_amplitudes(std::move(a));
}

inline Vec random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec v(static_cast<Eigen::Index>(1ULL << n));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = cd(g(rng), g(rng));
    }
    return v / v.norm();
}

/// |<a|b>|^2 for normalized vectors.
inline double fidelity(const Vec &a, const Vec &b) {
    return std::norm(a.dot(b));
}

/// Dense matrix of one gate on n qubits, built from Kronecker products and
/// the exponential of its generator.
inline Mat gate_reference(const qchain::Gate &g, std::size_t n) {
    using qchain::GateKind;
    auto one = [&](const Mat &u, std::size_t q) {
        Mat m = Mat::Identity(1, 1);
        for (std::size_t i = 0; i < n; ++i) {
            Mat next = Eigen::kroneckerProduct(m, i == q ? u : Mat::Identity(2, 2))
                           .eval();
            m = next;
        }
        return m;
    };
    auto pair_label = [&](char c) {
        std::string s(n, 'I');
        s[g.qubits[0]] = c;
        s[g.qubits[1]] = c;
        return s;
    };
    const cd mi(0, -1);
    switch (g.kind) {
    case GateKind::X:
        return one(pauli('X'), g.qubits[0]);
    case GateKind::H:
        return one((pauli('X') + pauli('Z')) / std::sqrt(2.0), g.qubits[0]);
    case GateKind::RX:
        return one((mi * g.angle / 2.0 * pauli('X')).exp(), g.qubits[0]);
    case GateKind::RY:
        return one((mi * g.angle / 2.0 * pauli('Y')).exp(), g.qubits[0]);
    case GateKind::RZ:
        return one((mi * g.angle / 2.0 * pauli('Z')).exp(), g.qubits[0]);
    case GateKind::CNOT: {
        std::string zc(n, 'I');
        zc[g.qubits[0]] = 'Z';
        std::string xt(n, 'I');
        xt[g.qubits[1]] = 'X';
        std::string zx = zc;
        zx[g.qubits[1]] = 'X';
        const auto dim = static_cast<Eigen::Index>(1ULL << n);
        return (Mat::Identity(dim, dim) + pauli_op(zc) + pauli_op(xt) -
                pauli_op(zx)) /
               2.0;
    }
    case GateKind::RXX:
        return (mi * g.angle / 2.0 * pauli_op(pair_label('X'))).exp();
    case GateKind::RYY:
        return (mi * g.angle / 2.0 * pauli_op(pair_label('Y'))).exp();
    case GateKind::RZZ:
        return (mi * g.angle / 2.0 * pauli_op(pair_label('Z'))).exp();
    }
    return {};
}

inline Mat program_reference(const qchain::Program &p) {
    const auto dim = static_cast<Eigen::Index>(1ULL << p.num_qubits());
    Mat u = Mat::Identity(dim, dim);
    for (const auto &g : p.gates()) {
        u = gate_reference(g, p.num_qubits()) * u;
    }
    return u;
}

inline qchain::Gate random_gate(std::size_t n, std::mt19937_64 &rng,
                                bool allow_two_qubit = true) {
    using qchain::Gate;
    std::uniform_int_distribution<int> kind(0, allow_two_qubit && n > 1 ? 8 : 4);
    std::uniform_int_distribution<std::size_t> q(0, n - 1);
    std::uniform_real_distribution<double> angle(-2.0 * std::numbers::pi,
                                                 2.0 * std::numbers::pi);
    const std::size_t a = q(rng);
    std::size_t b = q(rng);
    while (n > 1 && b == a) {
        b = q(rng);
    }
    switch (kind(rng)) {
    case 0:
        return Gate::x(a);
    case 1:
        return Gate::h(a);
    case 2:
        return Gate::rx(a, angle(rng));
    case 3:
        return Gate::ry(a, angle(rng));
    case 4:
        return Gate::rz(a, angle(rng));
    case 5:
        return Gate::cnot(a, b);
    case 6:
        return Gate::rxx(a, b, angle(rng));
    case 7:
        return Gate::ryy(a, b, angle(rng));
    default:
        return Gate::rzz(a, b, angle(rng));
    }
}

/// Random program biased toward optimizable patterns: repeated gates,
/// inverse pairs and zero-sum rotation pairs appear often.
inline qchain::Program random_program(std::size_t n, std::size_t length,
                                      std::mt19937_64 &rng) {
    qchain::Program p(n);
    std::uniform_int_distribution<int> mode(0, 9);
    while (p.size() < length) {
        qchain::Gate g = random_gate(n, rng);
        p.append(g);
        const int m = mode(rng);
        if (m < 2) {
            p.append(g);
        } else if (m < 4 && g.is_parametric()) {
            g.angle = -g.angle;
            p.append(g);
        } else if (m == 4 && g.is_parametric()) {
            g.angle = 2.0 * std::numbers::pi;
            p.append(g);
        }
    }
    return p;
}

/// Phase-aligned max distance, computed independently of the library.
inline double phase_distance(const Mat &a, const Mat &b) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) < 1e-14) {
        return (a - b).cwiseAbs().maxCoeff() + 1.0;
    }
    const cd phase = a(r, c) / b(r, c);
    return (a - (phase / std::abs(phase)) * b).cwiseAbs().maxCoeff();
}

} // namespace testing
