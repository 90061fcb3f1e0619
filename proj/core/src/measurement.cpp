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

#include "qchain/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qchain/error.hpp"

namespace qchain {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t x = seed ^ (stream * 0x9e3779b97f4a7c15ULL);
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<MeasurementGroup>
group_qubitwise_commuting(const std::vector<PauliTerm> &observable) {
    std::vector<MeasurementGroup> groups;
    for (std::size_t t = 0; t < observable.size(); ++t) {
        const auto p = PauliString::from_factors(observable[t].factors);
        if (p.is_identity()) {
            continue;
        }
        bool placed = false;
        for (auto &g : groups) {
            const std::uint64_t overlap = g.basis.support() & p.support();
            const bool compatible = ((g.basis.x ^ p.x) & overlap) == 0 &&
                                    ((g.basis.z ^ p.z) & overlap) == 0;
            if (compatible) {
                g.basis.x |= p.x;
                g.basis.z |= p.z;
                g.terms.push_back(t);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back({p, {t}});
        }
    }
    return groups;
}

Program basis_rotation(const PauliString &basis, std::size_t num_qubits) {
    Program p(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        switch (basis.op(q)) {
        case 'X':
            p.append(Gate::h(q));
            break;
        case 'Y':
            p.append(Gate::rx(q, std::numbers::pi / 2.0));
            break;
        default:
            break;
        }
    }
    return p;
}

Program measurement_circuit(const Program &prep, const PauliString &basis) {
    Program p = prep;
    p.append(basis_rotation(basis, prep.num_qubits()));
    p.set_measured(true);
    return p;
}

ShotEstimate estimate_with_shots(const Statevector &state,
                                 const std::vector<PauliTerm> &observable,
                                 std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArgument, "shots must be >= 1");
    }
    ShotEstimate est;
    for (const auto &term : observable) {
        if (term.factors.empty()) {
            est.value += term.coefficient;
        }
    }
    const auto groups = group_qubitwise_commuting(observable);
    double variance = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        Statevector rotated = state;
        rotated.apply(basis_rotation(groups[g].basis, state.num_qubits()));
        const Counts counts = sample_counts(rotated, shots, mix_seed(seed, g));
        double sum = 0.0;
        double sum_sq = 0.0;
        for (const auto &[bits, count] : counts) {
            double value = 0.0;
            for (std::size_t t : groups[g].terms) {
                double v = observable[t].coefficient;
                for (const auto &f : observable[t].factors) {
                    if (bits[f.qubit] == '1') {
                        v = -v;
                    }
                }
                value += v;
            }
            sum += value * static_cast<double>(count);
            sum_sq += value * value * static_cast<double>(count);
        }
        const double s = static_cast<double>(shots);
        const double mean = sum / s;
        est.value += mean;
        variance += std::max(0.0, sum_sq / s - mean * mean) / s;
    }
    est.sigma = std::sqrt(variance);
    return est;
}

} // namespace qchain
