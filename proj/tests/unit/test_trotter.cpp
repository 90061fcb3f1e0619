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

#include "catch_amalgamated.hpp"

#include "qchain/error.hpp"
#include "qchain/statevector.hpp"
#include "qchain/trotter.hpp"
#include "support.hpp"

using namespace qchain;

namespace {

std::vector<SpinState> all_up(std::size_t n) {
    return std::vector<SpinState>(n, SpinState::Up);
}

} // namespace

TEST_CASE("zero Hamiltonian gives an empty step") {
    CHECK(trotter_step(HeisenbergHamiltonian(3), 0.0, 0.1).empty());
    CHECK_THROWS_AS(trotter_step(HeisenbergHamiltonian(3), 0.0, 0.0), Error);
}

TEST_CASE("two-spin TFIM step") {
    const Program step = trotter_step(HeisenbergHamiltonian::tfim(2, 1.0, 1.0), 0.0, 0.1);
    REQUIRE(step.size() == 3);
    CHECK(step[0].kind == GateKind::RZZ);
    CHECK(step[0].qubits == std::array<std::size_t, 2>{0, 1});
    CHECK(step[0].angle == Catch::Approx(0.2).epsilon(1e-15));
    CHECK(step[1] == Gate::rx(0, step[1].angle));
    CHECK(step[2] == Gate::rx(1, step[2].angle));
    CHECK(step[1].angle == Catch::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("one small step approximates the exact propagator") {
    const auto h = HeisenbergHamiltonian::tfim(3, 1.0, 1.0);
    const double dt = 0.01;
    const Eigen::MatrixXcd exact =
        (std::complex<double>(0, -dt) * testing::operator_of(h.snapshot(0.0), 3)).exp();
    const Eigen::MatrixXcd u = unitary_of(trotter_step(h, 0.0, dt));
    CHECK(testing::phase_distance(exact, u) <= 10.0 * dt * dt);
}

TEST_CASE("gate count per step") {
    HeisenbergHamiltonian h(5);
    h.set_bonds(Axis::X, std::vector<Coefficient>(4, Coefficient::constant(1.0)));
    h.set_bonds(Axis::Y, std::vector<Coefficient>(4, Coefficient::constant(1.0)));
    h.set_fields(Axis::Z, std::vector<Coefficient>(5, Coefficient::constant(2.0)));
    CHECK(trotter_step(h, 0.0, 0.05).size() == 2 * 4 + 5);
}

TEST_CASE("state preparation") {
    const auto h = HeisenbergHamiltonian::tfim(5, 1.0, 1.0);
    const TrotterParams params{1.0, 10};
    CHECK(build_evolution_program(h, params, 0, all_up(5)).empty());
    std::vector<SpinState> flip(5, SpinState::Up);
    flip[0] = SpinState::Down;
    const Program p = build_evolution_program(h, params, 0, flip);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == Gate::x(0));
    CHECK_THROWS_AS(build_evolution_program(h, params, 11, flip), Error);
    CHECK_THROWS_AS(build_evolution_program(h, params, 1, all_up(4)), Error);
}

TEST_CASE("time-dependent steps sample the midpoint") {
    HeisenbergHamiltonian h(1);
    h.set_field(Axis::X, 0, Coefficient::ramp(0.0, 1.0, 1.0));
    const Program p = build_evolution_program(h, {1.0, 4}, 4, all_up(1));
    REQUIRE(p.size() == 4);
    for (std::size_t j = 1; j <= 4; ++j) {
        const double mid = (static_cast<double>(j) - 0.5) * 0.25;
        CHECK(p[j - 1].angle == Catch::Approx(2.0 * mid * 0.25));
    }
}

TEST_CASE("fidelity improves as the step count doubles") {
    const auto h = HeisenbergHamiltonian::tfim(3, 1.0, 1.0);
    const Eigen::VectorXcd start = Eigen::VectorXcd::Unit(8, 0);
    const Eigen::VectorXcd exact =
        (std::complex<double>(0, -1.0) * testing::operator_of(h.snapshot(0.0), 3)).exp() *
        start;
    double previous = 1.0;
    for (std::size_t n : {10U, 20U, 40U, 80U}) {
        const auto state =
            run_statevector(build_evolution_program(h, {1.0, n}, n, all_up(3)));
        const double infidelity = 1.0 - testing::fidelity(exact, testing::to_vec(state));
        CHECK(infidelity < previous);
        CHECK(std::abs(state.norm_squared() - 1.0) <= 1e-10);
        previous = infidelity;
    }
}
