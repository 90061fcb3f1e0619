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

#include "qchain/gate.hpp"

#include <cmath>
#include <complex>

namespace qchain {

Gate Gate::rotation(Axis axis, std::size_t q, double t) {
    switch (axis) {
    case Axis::X:
        return rx(q, t);
    case Axis::Y:
        return ry(q, t);
    case Axis::Z:
        return rz(q, t);
    }
    return rz(q, t);
}

Gate Gate::pair_rotation(Axis axis, std::size_t a, std::size_t b, double t) {
    switch (axis) {
    case Axis::X:
        return rxx(a, b, t);
    case Axis::Y:
        return ryy(a, b, t);
    case Axis::Z:
        return rzz(a, b, t);
    }
    return rzz(a, b, t);
}

std::size_t arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::RXX:
    case GateKind::RYY:
    case GateKind::RZZ:
        return 2;
    default:
        return 1;
    }
}

bool is_parametric(GateKind kind) noexcept {
    return rotation_axis(kind).has_value();
}

std::size_t Gate::arity() const noexcept { return qchain::arity(kind); }
bool Gate::is_parametric() const noexcept { return qchain::is_parametric(kind); }

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::RX:
        return "rx";
    case GateKind::RY:
        return "ry";
    case GateKind::RZ:
        return "rz";
    case GateKind::CNOT:
        return "cx";
    case GateKind::RXX:
        return "rxx";
    case GateKind::RYY:
        return "ryy";
    case GateKind::RZZ:
        return "rzz";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (auto k : {GateKind::X, GateKind::H, GateKind::RX, GateKind::RY,
                   GateKind::RZ, GateKind::CNOT, GateKind::RXX, GateKind::RYY,
                   GateKind::RZZ}) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<Axis> rotation_axis(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RXX:
        return Axis::X;
    case GateKind::RY:
    case GateKind::RYY:
        return Axis::Y;
    case GateKind::RZ:
    case GateKind::RZZ:
        return Axis::Z;
    default:
        return std::nullopt;
    }
}

Eigen::MatrixXcd gate_matrix(const Gate &g) {
    using C = std::complex<double>;
    const double c = std::cos(g.angle / 2.0);
    const double s = std::sin(g.angle / 2.0);
    const C ic(0.0, 1.0);
    switch (g.kind) {
    case GateKind::X: {
        Eigen::MatrixXcd m(2, 2);
        m << 0.0, 1.0, 1.0, 0.0;
        return m;
    }
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        Eigen::MatrixXcd m(2, 2);
        m << r, r, r, -r;
        return m;
    }
    case GateKind::RX: {
        Eigen::MatrixXcd m(2, 2);
        m << c, -ic * s, -ic * s, c;
        return m;
    }
    case GateKind::RY: {
        Eigen::MatrixXcd m(2, 2);
        m << c, -s, s, c;
        return m;
    }
    case GateKind::RZ: {
        Eigen::MatrixXcd m(2, 2);
        m << std::exp(-ic * (g.angle / 2.0)), 0.0, 0.0,
            std::exp(ic * (g.angle / 2.0));
        return m;
    }
    case GateKind::CNOT: {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        m(2, 3) = 1.0;
        m(3, 2) = 1.0;
        return m;
    }
    case GateKind::RXX: {
        // cos(t/2) I - i sin(t/2) X(x)X
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
        for (int k = 0; k < 4; ++k) {
            m(k, k) = c;
            m(k, 3 - k) = -ic * s;
        }
        return m;
    }
    case GateKind::RYY: {
        // Y(x)Y has -1 on |00><11|, |11><00| and +1 on |01><10|, |10><01|.
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
        for (int k = 0; k < 4; ++k) {
            m(k, k) = c;
        }
        m(0, 3) = ic * s;
        m(3, 0) = ic * s;
        m(1, 2) = -ic * s;
        m(2, 1) = -ic * s;
        return m;
    }
    case GateKind::RZZ: {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
        const C minus = std::exp(-ic * (g.angle / 2.0));
        const C plus = std::exp(ic * (g.angle / 2.0));
        m(0, 0) = minus;
        m(1, 1) = plus;
        m(2, 2) = plus;
        m(3, 3) = minus;
        return m;
    }
    }
    return Eigen::MatrixXcd::Identity(2, 2);
}

} // namespace qchain
