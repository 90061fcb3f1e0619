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

#include "qchain/program.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qchain/error.hpp"

namespace qchain {

Program::Program(std::size_t num_qubits) : n_(num_qubits) {}

void Program::append(const Gate &g) {
    const std::size_t k = g.arity();
    for (std::size_t i = 0; i < k; ++i) {
        if (g.qubits[i] >= n_) {
            throw Error(ErrorKind::QubitOutOfRange,
                        std::string(gate_name(g.kind)) + " on qubit " +
                            std::to_string(g.qubits[i]) + " in a " +
                            std::to_string(n_) + "-qubit program");
        }
    }
    if (k == 2 && g.qubits[0] == g.qubits[1]) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(gate_name(g.kind)) +
                        " needs two distinct qubits");
    }
    if (g.is_parametric() && !std::isfinite(g.angle)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite rotation angle");
    }
    Gate stored = g;
    if (k == 1) {
        stored.qubits[1] = stored.qubits[0];
    }
    if (!stored.is_parametric()) {
        stored.angle = 0.0;
    }
    gates_.push_back(stored);
}

void Program::append(const Program &other) {
    if (other.num_qubits() > n_) {
        throw Error(ErrorKind::QubitOutOfRange,
                    "cannot append a " + std::to_string(other.num_qubits()) +
                        "-qubit program to a " + std::to_string(n_) +
                        "-qubit program");
    }
    for (const auto &g : other.gates()) {
        append(g);
    }
}

bool is_native(GateKind kind) noexcept {
    return kind == GateKind::RZ || kind == GateKind::RX ||
           kind == GateKind::H || kind == GateKind::CNOT;
}

namespace {

void emit_rzz(Program &out, std::size_t a, std::size_t b, double t) {
    out.append(Gate::cnot(a, b));
    out.append(Gate::rz(b, t));
    out.append(Gate::cnot(a, b));
}

} // namespace

Program lower_to_native(const Program &p) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    Program out(p.num_qubits());
    out.set_measured(p.measured());
    for (const auto &g : p.gates()) {
        const auto a = g.qubits[0];
        const auto b = g.qubits[1];
        switch (g.kind) {
        case GateKind::RZ:
        case GateKind::RX:
        case GateKind::H:
        case GateKind::CNOT:
            out.append(g);
            break;
        case GateKind::X:
            out.append(Gate::rx(a, std::numbers::pi));
            break;
        case GateKind::RY:
            out.append(Gate::rx(a, half_pi));
            out.append(Gate::rz(a, g.angle));
            out.append(Gate::rx(a, -half_pi));
            break;
        case GateKind::RZZ:
            emit_rzz(out, a, b, g.angle);
            break;
        case GateKind::RXX:
            out.append(Gate::h(a));
            out.append(Gate::h(b));
            emit_rzz(out, a, b, g.angle);
            out.append(Gate::h(a));
            out.append(Gate::h(b));
            break;
        case GateKind::RYY:
            out.append(Gate::rx(a, half_pi));
            out.append(Gate::rx(b, half_pi));
            emit_rzz(out, a, b, g.angle);
            out.append(Gate::rx(a, -half_pi));
            out.append(Gate::rx(b, -half_pi));
            break;
        }
    }
    return out;
}

namespace {

/// Left-multiplies `u` in place by the embedding of gate g.
void apply_embedded(Eigen::MatrixXcd &u, const Gate &g, std::size_t n) {
    const Eigen::MatrixXcd m = gate_matrix(g);
    const Eigen::Index dim = u.rows();
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    if (g.arity() == 1) {
        const std::size_t shift = n - 1 - g.qubits[0];
        for (Eigen::Index r = 0; r < dim; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                const auto diff = static_cast<std::size_t>(r ^ c);
                if ((diff & ~(std::size_t{1} << shift)) != 0) {
                    continue;
                }
                const auto rb = (static_cast<std::size_t>(r) >> shift) & 1U;
                const auto cb = (static_cast<std::size_t>(c) >> shift) & 1U;
                full(r, c) = m(static_cast<Eigen::Index>(rb),
                               static_cast<Eigen::Index>(cb));
            }
        }
    } else {
        const std::size_t sa = n - 1 - g.qubits[0];
        const std::size_t sb = n - 1 - g.qubits[1];
        const std::size_t mask = (std::size_t{1} << sa) | (std::size_t{1} << sb);
        for (Eigen::Index r = 0; r < dim; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                const auto ur = static_cast<std::size_t>(r);
                const auto uc = static_cast<std::size_t>(c);
                if (((ur ^ uc) & ~mask) != 0) {
                    continue;
                }
                const auto ri = ((ur >> sa) & 1U) * 2 + ((ur >> sb) & 1U);
                const auto ci = ((uc >> sa) & 1U) * 2 + ((uc >> sb) & 1U);
                full(r, c) = m(static_cast<Eigen::Index>(ri),
                               static_cast<Eigen::Index>(ci));
            }
        }
    }
    u = full * u;
}

} // namespace

Eigen::MatrixXcd unitary_of(const Program &p) {
    const std::size_t n = p.num_qubits();
    if (n > kMaxUnitaryQubits) {
        throw Error(ErrorKind::TooLarge,
                    "unitary requested for " + std::to_string(n) +
                        " qubits (limit " + std::to_string(kMaxUnitaryQubits) +
                        ")");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &g : p.gates()) {
        apply_embedded(u, g, n);
    }
    return u;
}

double phase_aligned_distance(const Eigen::MatrixXcd &a,
                              const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::InvalidArgument,
                    "phase_aligned_distance: shape mismatch");
    }
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    std::complex<double> phase(1.0, 0.0);
    if (std::abs(b(r, c)) > 0.0 && std::abs(a(r, c)) > 0.0) {
        const auto ratio = a(r, c) / b(r, c);
        phase = ratio / std::abs(ratio);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

} // namespace qchain
