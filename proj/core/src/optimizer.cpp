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

#include "qchain/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace qchain {

namespace {

bool is_zero_angle(double angle) {
    return std::abs(std::remainder(angle, 2.0 * std::numbers::pi)) <=
           kZeroAngleTolerance;
}

bool is_self_inverse(GateKind k) {
    return k == GateKind::H || k == GateKind::X || k == GateKind::CNOT;
}

bool is_symmetric(GateKind k) {
    return k == GateKind::RXX || k == GateKind::RYY || k == GateKind::RZZ;
}

bool same_operands(const Gate &a, const Gate &b) {
    if (a.arity() != b.arity()) {
        return false;
    }
    if (a.arity() == 1) {
        return a.qubits[0] == b.qubits[0];
    }
    if (a.qubits == b.qubits) {
        return true;
    }
    return is_symmetric(a.kind) && a.qubits[0] == b.qubits[1] &&
           a.qubits[1] == b.qubits[0];
}

class PeepholePass {
  public:
    explicit PeepholePass(std::size_t num_qubits) : wires_(num_qubits) {}

    void push(const Gate &g, OptimizerStats &stats) {
        if (g.is_parametric() && is_zero_angle(g.angle)) {
            ++stats.dropped_rotations;
            changed_ = true;
            return;
        }
        if (auto k = predecessor(g); k && same_operands(slots_[*k].gate, g)) {
            Gate &prev = slots_[*k].gate;
            if (prev.kind == g.kind && g.is_parametric()) {
                prev.angle += g.angle;
                ++stats.merged_rotations;
                changed_ = true;
                if (is_zero_angle(prev.angle)) {
                    remove(*k);
                    ++stats.dropped_rotations;
                }
                return;
            }
            if (prev.kind == g.kind && is_self_inverse(g.kind)) {
                remove(*k);
                ++stats.cancelled_pairs;
                changed_ = true;
                return;
            }
        }
        const std::size_t index = slots_.size();
        slots_.push_back({g, true});
        for (std::size_t i = 0; i < g.arity(); ++i) {
            wires_[g.qubits[i]].push_back(index);
        }
    }

    [[nodiscard]] bool changed() const noexcept { return changed_; }

    [[nodiscard]] Program result(const Program &like) const {
        Program out(like.num_qubits());
        out.set_measured(like.measured());
        for (const auto &s : slots_) {
            if (s.alive) {
                out.append(s.gate);
            }
        }
        return out;
    }

  private:
    struct Slot {
        Gate gate;
        bool alive;
    };

    /// Latest surviving gate that is last on every wire of g, if any.
    std::optional<std::size_t> predecessor(const Gate &g) const {
        std::optional<std::size_t> k;
        for (std::size_t i = 0; i < g.arity(); ++i) {
            const auto &w = wires_[g.qubits[i]];
            if (w.empty()) {
                return std::nullopt;
            }
            if (k && *k != w.back()) {
                return std::nullopt;
            }
            k = w.back();
        }
        return k;
    }

    void remove(std::size_t k) {
        slots_[k].alive = false;
        const Gate &g = slots_[k].gate;
        for (std::size_t i = 0; i < g.arity(); ++i) {
            wires_[g.qubits[i]].pop_back();
        }
    }

    std::vector<Slot> slots_;
    std::vector<std::vector<std::size_t>> wires_;
    bool changed_ = false;
};

} // namespace

Program optimize(const Program &p, OptimizerStats *stats) {
    OptimizerStats local;
    OptimizerStats &s = stats != nullptr ? *stats : local;
    s = OptimizerStats{};
    Program current = p;
    while (true) {
        PeepholePass pass(current.num_qubits());
        for (const auto &g : current.gates()) {
            pass.push(g, s);
        }
        ++s.passes;
        current = pass.result(current);
        if (!pass.changed()) {
            break;
        }
    }
    return current;
}

} // namespace qchain
