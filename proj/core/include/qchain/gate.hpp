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
#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "qchain/pauli.hpp"

namespace qchain {

enum class GateKind : std::uint8_t { X, H, RX, RY, RZ, CNOT, RXX, RYY, RZZ };

/// Rotation conventions, shared by every module:
///   RA(t)  = exp(-i t A / 2)           for A in {X, Y, Z}
///   RAA(t) = exp(-i t (A (x) A) / 2)
/// CNOT takes (control, target).
struct Gate {
    GateKind kind = GateKind::X;
    std::array<std::size_t, 2> qubits{0, 0};
    double angle = 0.0;

    static Gate x(std::size_t q) { return {GateKind::X, {q, q}, 0.0}; }
    static Gate h(std::size_t q) { return {GateKind::H, {q, q}, 0.0}; }
    static Gate rx(std::size_t q, double t) { return {GateKind::RX, {q, q}, t}; }
    static Gate ry(std::size_t q, double t) { return {GateKind::RY, {q, q}, t}; }
    static Gate rz(std::size_t q, double t) { return {GateKind::RZ, {q, q}, t}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}, 0.0};
    }
    static Gate rxx(std::size_t a, std::size_t b, double t) {
        return {GateKind::RXX, {a, b}, t};
    }
    static Gate ryy(std::size_t a, std::size_t b, double t) {
        return {GateKind::RYY, {a, b}, t};
    }
    static Gate rzz(std::size_t a, std::size_t b, double t) {
        return {GateKind::RZZ, {a, b}, t};
    }

    /// Single-axis rotation about `axis`.
    static Gate rotation(Axis axis, std::size_t q, double t);
    /// Two-qubit A(x)A rotation about `axis`.
    static Gate pair_rotation(Axis axis, std::size_t a, std::size_t b, double t);

    [[nodiscard]] std::size_t arity() const noexcept;
    [[nodiscard]] bool is_parametric() const noexcept;

    friend bool operator==(const Gate &, const Gate &) = default;
};

[[nodiscard]] std::size_t arity(GateKind kind) noexcept;
[[nodiscard]] bool is_parametric(GateKind kind) noexcept;
[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;
[[nodiscard]] std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Rotation axis of RX/RY/RZ/RXX/RYY/RZZ.
[[nodiscard]] std::optional<Axis> rotation_axis(GateKind kind) noexcept;

/// 2x2 matrix for one-qubit gates or 4x4 for two-qubit gates, with the first
/// operand as the more significant index bit.
[[nodiscard]] Eigen::MatrixXcd gate_matrix(const Gate &g);

} // namespace qchain
