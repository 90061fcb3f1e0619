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

#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"

#include "qchain/error.hpp"
#include "qchain/oracle.hpp"
#include "qchain/qite.hpp"
#include "support.hpp"

using namespace qchain;

namespace {

Statevector plus_state() {
    return Statevector::from_amplitudes({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
}

const PauliTerm kZ{1.0, {{0, Axis::Z}}};

} // namespace

TEST_CASE("one-qubit calibration against the closed form") {
    QiteParams params;
    params.dbeta = 0.1;
    const auto fit = fit_step_unitary(plus_state(), kZ, params);
    Statevector s = plus_state();
    s.apply(fit.circuit);
    const double z = expectation(s, {kZ});
    // e^{-b Z}|+> / norm has <Z> = -tanh(2b).
    const double exact = -std::tanh(0.2);
    const double oracle =
        evolve_imaginary_exact({kZ}, 0.1, plus_state()).energy;
    CHECK(oracle == Catch::Approx(exact).epsilon(1e-12));
    CHECK(std::abs(z - exact) <= 5e-3);
    CHECK(z < 0.0);
    // First-order fit: a_Y = 1/sqrt(c), rotation angle 2 db a_Y.
    const double c = 1.0 + 0.01;
    CHECK(fit.normalization == Catch::Approx(c));
    // The 1e-6 regularization shifts the angle by O(1e-6).
    CHECK(z == Catch::Approx(-std::sin(0.2 / std::sqrt(c))).epsilon(1e-5));
}

TEST_CASE("energy strictly decreases on the calibration case") {
    QiteParams params;
    params.dbeta = 0.1;
    Statevector s = plus_state();
    double previous = expectation(s, {kZ});
    for (int step = 0; step < 10; ++step) {
        s.apply(fit_step_unitary(s, kZ, params).circuit);
        const double e = expectation(s, {kZ});
        CHECK(e < previous);
        previous = e;
    }
}

TEST_CASE("eigenstates are stationary") {
    QiteParams params;
    const auto fit = fit_step_unitary(Statevector(1), kZ, params);
    CHECK(fit.coefficients.cwiseAbs().maxCoeff() < 1e-12);
    Statevector s(1);
    s.apply(fit.circuit);
    CHECK(std::abs(s[0]) == Catch::Approx(1.0));

    HeisenbergHamiltonian h(1);
    h.set_field(Axis::Z, 0, Coefficient::constant(1.0));
    params.num_steps = 5;
    const auto r = run_qite(h, params, {SpinState::Up});
    CHECK(r.initial_energy == 1.0);
    for (const auto &rep : r.reports) {
        CHECK(rep.energy == Catch::Approx(1.0));
    }
    const auto down = run_qite(h, params, {SpinState::Down});
    CHECK(down.reports.back().energy == Catch::Approx(-1.0));
}

TEST_CASE("S is symmetric positive semidefinite") {
    std::mt19937_64 rng(4);
    const auto basis = pauli_basis({0, 1});
    for (int trial = 0; trial < 20; ++trial) {
        const auto state = testing::from_vec(testing::random_state(3, rng));
        Eigen::MatrixXd s(15, 15);
        for (int i = 0; i < 15; ++i) {
            for (int j = 0; j < 15; ++j) {
                s(i, j) = product_expectation(state, basis[i], basis[j]).real();
            }
        }
        CHECK((s - s.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
        CHECK(eig.eigenvalues().minCoeff() >= -1e-12);
    }
}

TEST_CASE("Pauli rotations match the matrix exponential") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (const auto &p : pauli_basis({0, 1, 2})) {
        const double theta = angle(rng);
        const Program circuit = pauli_rotation(p, theta, 3);
        const Eigen::MatrixXcd target =
            (std::complex<double>(0, -theta / 2) *
             testing::operator_of({{1.0, p.factors()}}, 3))
                .exp();
        CHECK(testing::phase_distance(target, unitary_of(circuit)) < 1e-10);
    }
}

TEST_CASE("fitting domains") {
    const PauliTerm bond{1.0, {{1, Axis::Z}, {2, Axis::Z}}};
    CHECK(fitting_domain(bond, 5, 0) == std::vector<std::size_t>{1, 2});
    CHECK(fitting_domain(bond, 5, 1) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(fitting_domain(bond, 4, 3) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(pauli_basis(fitting_domain(bond, 5, 0)).size() == 15);
    CHECK(pauli_basis({4}).size() == 3);
    QiteParams params;
    params.domain_radius = 1;
    const auto fit =
        fit_step_unitary(testing::from_vec(Eigen::VectorXcd::Unit(32, 3)), bond, params);
    CHECK(fit.basis.size() == 255);
}

TEST_CASE("TFIM QITE: unitary, bounded below, converging") {
    const auto h = HeisenbergHamiltonian::tfim(3, 1.0, 1.0);
    const double e0 = ground_state(h.snapshot(0.0), 3).energy;
    QiteParams params;
    params.dbeta = 0.3;
    params.num_steps = 10;
    params.domain_radius = 1;
    const auto r = run_qite(h, params, std::vector<SpinState>(3, SpinState::Up));
    CHECK(std::abs(r.final_state.norm_squared() - 1.0) <= 1e-10);
    REQUIRE(r.reports.size() == 10);
    for (const auto &rep : r.reports) {
        CHECK(rep.energy >= e0 - 1e-9);
        CHECK(rep.residual_norm >= 0.0);
        CHECK(rep.coefficients.size() == 5);
    }
    CHECK(r.reports.back().energy < r.initial_energy);
    // The accumulated circuit reproduces the final state.
    const Statevector replay = run_statevector(r.circuit);
    CHECK(std::abs(std::abs(replay.inner(r.final_state)) - 1.0) < 1e-10);
}

TEST_CASE("halving the imaginary time step reduces the final error") {
    const auto h = HeisenbergHamiltonian::tfim(3, 1.0, 1.0);
    const double e0 = ground_state(h.snapshot(0.0), 3).energy;
    double previous = 1e9;
    for (std::size_t steps : {20U, 40U, 80U}) {
        QiteParams params;
        params.dbeta = 6.0 / static_cast<double>(steps);
        params.num_steps = steps;
        params.domain_radius = 1;
        const auto r = run_qite(h, params, std::vector<SpinState>(3, SpinState::Up));
        const double err = r.reports.back().energy - e0;
        CHECK(err < previous);
        previous = err;
    }
}

TEST_CASE("time-dependent Hamiltonians are rejected") {
    HeisenbergHamiltonian h(2);
    h.set_field(Axis::X, 0, Coefficient::ramp(0, 1, 1));
    CHECK_THROWS_AS(run_qite(h, QiteParams{}, {SpinState::Up, SpinState::Up}), Error);
}

TEST_CASE("shot-based QITE is reproducible") {
    const auto h = HeisenbergHamiltonian::tfim(2, 1.0, 1.0);
    QiteParams params;
    params.dbeta = 0.2;
    params.num_steps = 3;
    params.shots = 2000;
    params.seed = 77;
    const std::vector<SpinState> up(2, SpinState::Up);
    const auto a = run_qite(h, params, up);
    const auto b = run_qite(h, params, up);
    REQUIRE(a.reports.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.reports[i].energy == b.reports[i].energy);
        CHECK(a.reports[i].energy_sigma > 0.0);
    }
}
