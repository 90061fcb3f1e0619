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

#include "qchain/qite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "qchain/error.hpp"
#include "qchain/measurement.hpp"
#include "qchain/trotter.hpp"

namespace qchain {

namespace {

/// <P> for bare Pauli strings, exact or sampled, memoized for one fit.
class PauliExpectations {
  public:
    PauliExpectations(const Statevector &state, std::uint64_t shots,
                      std::uint64_t seed)
        : state_(state), shots_(shots), seed_(seed) {}

    double operator()(const PauliString &p) {
        if (p.is_identity()) {
            return 1.0;
        }
        if (auto it = cache_.find(p); it != cache_.end()) {
            return it->second;
        }
        const double v = shots_ == 0 ? expectation(state_, p) : sampled(p);
        cache_.emplace(p, v);
        return v;
    }

    /// <a b> = i^phase <P>.
    std::complex<double> product(const PauliString &a, const PauliString &b) {
        const auto prod = multiply(a, b);
        return i_power(prod.phase) * (*this)(prod.result);
    }

  private:
    double sampled(const PauliString &p) {
        Statevector rotated = state_;
        rotated.apply(basis_rotation(p, state_.num_qubits()));
        const auto counts = sample_counts(
            rotated, shots_, mix_seed(seed_, p.x * 0x100000001b3ULL ^ p.z));
        double acc = 0.0;
        for (const auto &[bits, count] : counts) {
            int parity = 0;
            for (std::size_t q = 0; q < bits.size(); ++q) {
                if (((p.support() >> q) & 1U) != 0 && bits[q] == '1') {
                    parity ^= 1;
                }
            }
            acc += (parity != 0 ? -1.0 : 1.0) * static_cast<double>(count);
        }
        return acc / static_cast<double>(shots_);
    }

    const Statevector &state_;
    std::uint64_t shots_;
    std::uint64_t seed_;
    std::map<PauliString, double> cache_;
};

Eigen::VectorXd solve_regularized(const Eigen::MatrixXd &s,
                                  const Eigen::VectorXd &b, double delta) {
    const Eigen::Index dim = s.rows();
    const Eigen::MatrixXd a = s + delta * Eigen::MatrixXd::Identity(dim, dim);
    if (delta > 0.0) {
        Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
        if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
            Eigen::VectorXd x = ldlt.solve(b);
            if (x.allFinite() && (a * x - b).norm() <= 1e-8 * (1.0 + b.norm())) {
                return x;
            }
        }
    }
    // Pseudo-inverse fallback on the symmetric (possibly singular) system.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorKind::SingularSystem,
                    "eigendecomposition of the QITE system failed");
    }
    const Eigen::VectorXd &w = eig.eigenvalues();
    const double wmax = w.cwiseAbs().maxCoeff();
    const double cutoff = 1e-12 * std::max(1.0, wmax);
    Eigen::VectorXd projected = eig.eigenvectors().transpose() * b;
    for (Eigen::Index i = 0; i < dim; ++i) {
        projected(i) = std::abs(w(i)) > cutoff ? projected(i) / w(i) : 0.0;
    }
    Eigen::VectorXd x = eig.eigenvectors() * projected;
    if (!x.allFinite()) {
        throw Error(ErrorKind::SingularSystem,
                    "QITE linear system has no finite solution");
    }
    return x;
}

} // namespace

Program pauli_rotation(const PauliString &p, double theta,
                       std::size_t num_qubits) {
    Program out(num_qubits);
    const auto factors = p.factors();
    if (factors.empty()) {
        return out;
    }
    if (factors.size() == 1) {
        out.append(Gate::rotation(factors[0].axis, factors[0].qubit, theta));
        return out;
    }
    if (factors.size() == 2 && factors[0].axis == factors[1].axis) {
        out.append(Gate::pair_rotation(factors[0].axis, factors[0].qubit,
                                       factors[1].qubit, theta));
        return out;
    }
    constexpr double half_pi = std::numbers::pi / 2.0;
    for (const auto &f : factors) {
        if (f.axis == Axis::X) {
            out.append(Gate::h(f.qubit));
        } else if (f.axis == Axis::Y) {
            out.append(Gate::rx(f.qubit, half_pi));
        }
    }
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        out.append(Gate::cnot(factors[i].qubit, factors[i + 1].qubit));
    }
    out.append(Gate::rz(factors.back().qubit, theta));
    for (std::size_t i = factors.size() - 1; i > 0; --i) {
        out.append(Gate::cnot(factors[i - 1].qubit, factors[i].qubit));
    }
    for (const auto &f : factors) {
        if (f.axis == Axis::X) {
            out.append(Gate::h(f.qubit));
        } else if (f.axis == Axis::Y) {
            out.append(Gate::rx(f.qubit, -half_pi));
        }
    }
    return out;
}

std::vector<std::size_t> fitting_domain(const PauliTerm &term,
                                        std::size_t num_qubits,
                                        std::size_t domain_radius) {
    if (term.factors.empty()) {
        return {};
    }
    std::size_t lo = num_qubits;
    std::size_t hi = 0;
    for (const auto &f : term.factors) {
        if (f.qubit >= num_qubits) {
            throw Error(ErrorKind::QubitOutOfRange,
                        "term acts outside the chain");
        }
        lo = std::min(lo, f.qubit);
        hi = std::max(hi, f.qubit);
    }
    lo = lo >= domain_radius ? lo - domain_radius : 0;
    hi = std::min(num_qubits - 1, hi + domain_radius);
    std::vector<std::size_t> out;
    for (std::size_t q = lo; q <= hi; ++q) {
        out.push_back(q);
    }
    return out;
}

QiteFit fit_step_unitary(const Statevector &state, const PauliTerm &term,
                         const QiteParams &params, std::uint64_t stream) {
    if (!(params.dbeta > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "dbeta must be > 0");
    }
    if (!(params.regularization >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "regularization must be >= 0");
    }
    const std::size_t n = state.num_qubits();
    QiteFit fit;
    fit.circuit = Program(n);
    fit.basis = pauli_basis(fitting_domain(term, n, params.domain_radius));
    const auto dim = static_cast<Eigen::Index>(fit.basis.size());
    fit.coefficients = Eigen::VectorXd::Zero(dim);
    if (dim == 0) {
        return fit; // identity term: e^{-dbeta c} is a global factor
    }

    PauliExpectations ev(state, params.shots, mix_seed(params.seed, stream));
    const PauliString h = PauliString::from_factors(term.factors);
    const double ch = term.coefficient;
    const double db = params.dbeta;

    fit.normalization = 1.0 - 2.0 * db * ch * ev(h) + db * db * ch * ch;
    if (!(fit.normalization > 1e-300)) {
        throw Error(ErrorKind::SingularSystem,
                    "imaginary-time step annihilates the state (c <= 0)");
    }
    const double inv_sqrt_c = 1.0 / std::sqrt(fit.normalization);

    Eigen::MatrixXd s(dim, dim);
    Eigen::VectorXd b(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto &si = fit.basis[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i; j < dim; ++j) {
            const auto &sj = fit.basis[static_cast<std::size_t>(j)];
            const double v = ev.product(si, sj).real();
            s(i, j) = v;
            s(j, i) = v;
        }
        b(i) = ch * ev.product(si, h).imag() * inv_sqrt_c;
    }

    fit.coefficients = solve_regularized(s, b, params.regularization);
    fit.residual_norm = (s * fit.coefficients - b).norm();

    for (Eigen::Index i = 0; i < dim; ++i) {
        const double theta = 2.0 * db * fit.coefficients(i);
        if (theta == 0.0) {
            continue;
        }
        fit.circuit.append(
            pauli_rotation(fit.basis[static_cast<std::size_t>(i)], theta, n));
    }
    return fit;
}

QiteResult run_qite(const HeisenbergHamiltonian &h, const QiteParams &params,
                    const std::vector<SpinState> &initial_state) {
    if (!h.is_time_independent()) {
        throw Error(ErrorKind::InvalidArgument,
                    "imaginary-time evolution requires a time-independent "
                    "Hamiltonian");
    }
    if (initial_state.size() != h.num_spins()) {
        throw Error(ErrorKind::InvalidArgument,
                    "initial state has " + std::to_string(initial_state.size()) +
                        " spins, Hamiltonian has " +
                        std::to_string(h.num_spins()));
    }
    const auto terms = h.snapshot(0.0);

    QiteResult result;
    result.circuit = state_preparation(initial_state);
    Statevector state = run_statevector(result.circuit);

    auto measure_energy = [&](std::uint64_t stream, double &sigma) {
        if (params.shots == 0) {
            sigma = 0.0;
            return expectation(state, terms);
        }
        const auto est = estimate_with_shots(state, terms, params.shots,
                                             mix_seed(params.seed, stream));
        sigma = est.sigma;
        return est.value;
    };

    double sigma0 = 0.0;
    result.initial_energy = measure_energy(~std::uint64_t{0}, sigma0);
    std::uint64_t stream = 0;
    for (std::size_t step = 1; step <= params.num_steps; ++step) {
        QiteStepReport report;
        report.step = step;
        for (const auto &term : terms) {
            const QiteFit fit = fit_step_unitary(state, term, params, stream++);
            state.apply(fit.circuit);
            result.circuit.append(fit.circuit);
            report.coefficients.push_back(fit.coefficients);
            report.residual_norm = std::max(report.residual_norm, fit.residual_norm);
            report.normalization *= fit.normalization;
        }
        report.energy = measure_energy(stream++, report.energy_sigma);
        result.reports.push_back(std::move(report));
    }
    result.final_state = std::move(state);
    return result;
}

} // namespace qchain
