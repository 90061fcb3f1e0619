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

#include <random>

#include "catch_amalgamated.hpp"

#include "qchain/error.hpp"
#include "qchain/hamiltonian.hpp"
#include "support.hpp"

using namespace qchain;

TEST_CASE("three-spin TFIM snapshot") {
    const auto h = HeisenbergHamiltonian::tfim(3, 1.0, 1.0);
    const std::vector<PauliTerm> expected = {
        {1.0, {{0, Axis::Z}, {1, Axis::Z}}},
        {1.0, {{1, Axis::Z}, {2, Axis::Z}}},
        {1.0, {{0, Axis::X}}},
        {1.0, {{1, Axis::X}}},
        {1.0, {{2, Axis::X}}},
    };
    for (double t : {0.0, 0.37, 12.0}) {
        CHECK(h.snapshot(t) == expected);
    }
}

TEST_CASE("ramp field at its midpoint") {
    HeisenbergHamiltonian h(1);
    h.set_field(Axis::X, 0, Coefficient::ramp(0.0, 2.0, 1.0));
    const auto terms = h.snapshot(0.5);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coefficient == Catch::Approx(1.0).epsilon(1e-15));
    CHECK_FALSE(h.is_time_independent());
}

TEST_CASE("all-zero Hamiltonian has no terms") {
    HeisenbergHamiltonian h(4);
    CHECK(h.snapshot(0.0).empty());
    CHECK(h.active_term_count() == 0);
    CHECK_THROWS_AS(HeisenbergHamiltonian(0), Error);
}

TEST_CASE("term count follows the active axes") {
    HeisenbergHamiltonian h(5);
    h.set_bonds(Axis::X, std::vector<Coefficient>(4, Coefficient::constant(1.0)));
    h.set_bonds(Axis::Y, std::vector<Coefficient>(4, Coefficient::constant(1.0)));
    h.set_fields(Axis::Z, std::vector<Coefficient>(5, Coefficient::constant(0.3)));
    CHECK(h.snapshot(0.0).size() == 2 * 4 + 5);
    CHECK_THROWS_AS(h.set_fields(Axis::X, std::vector<Coefficient>(3)), Error);
}

TEST_CASE("dense matrices of single terms") {
    const Eigen::MatrixXcd z = dense_matrix({{1.0, {{0, Axis::Z}}}}, 1);
    CHECK(z.isApprox(testing::pauli('Z')));
    const Eigen::MatrixXcd xx = dense_matrix({{1.0, {{0, Axis::X}, {1, Axis::X}}}}, 2);
    Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        anti(i, 3 - i) = 1.0;
    }
    CHECK(xx.isApprox(anti));
    // Site 1 is the most significant qubit.
    const Eigen::MatrixXcd z0 = dense_matrix({{1.0, {{0, Axis::Z}}}}, 2);
    CHECK(z0(1, 1).real() == 1.0);
    CHECK(z0(2, 2).real() == -1.0);
    CHECK_THROWS_AS(dense_matrix({}, 13), Error);
}

TEST_CASE("two-spin TFIM spectrum matches an independent solver") {
    const auto terms = HeisenbergHamiltonian::tfim(2, 1.0, 1.0).snapshot(0.0);
    const Eigen::MatrixXcd m = dense_matrix(terms, 2);
    const Eigen::MatrixXcd ref = testing::operator_of(terms, 2);
    CHECK((m - ref).cwiseAbs().maxCoeff() < 1e-14);
    // Characteristic values: H = ZZ + XI + IX has eigenvalues +-sqrt(5), +-1.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(ref);
    std::vector<double> ev;
    for (int i = 0; i < 4; ++i) {
        ev.push_back(ces.eigenvalues()(i).real());
    }
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == Catch::Approx(-std::sqrt(5.0)));
    CHECK(ev[1] == Catch::Approx(-1.0));
    CHECK(ev[2] == Catch::Approx(1.0));
    CHECK(ev[3] == Catch::Approx(std::sqrt(5.0)));
}

TEST_CASE("dense matrices are Hermitian and match Kronecker products") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        HeisenbergHamiltonian h(n);
        for (Axis a : kAxes) {
            std::vector<Coefficient> bonds;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                bonds.push_back(Coefficient::constant(u(rng)));
            }
            h.set_bonds(a, bonds);
            std::vector<Coefficient> fields;
            for (std::size_t i = 0; i < n; ++i) {
                fields.push_back(Coefficient::constant(u(rng)));
            }
            h.set_fields(a, fields);
        }
        const auto terms = h.snapshot(0.0);
        const Eigen::MatrixXcd m = dense_matrix(terms, n);
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((m - testing::operator_of(terms, n)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("snapshot is linear in the schedules") {
    HeisenbergHamiltonian a(3);
    a.set_bonds(Axis::Z, {Coefficient::constant(1.0), Coefficient::constant(0.5)});
    HeisenbergHamiltonian b(3);
    b.set_fields(Axis::X, {Coefficient::pulse(1.0, 0.5, 0.2), Coefficient::constant(0.0),
                           Coefficient::ramp(0.0, 1.0, 2.0)});
    HeisenbergHamiltonian sum(3);
    sum.set_bonds(Axis::Z, {Coefficient::constant(1.0), Coefficient::constant(0.5)});
    sum.set_fields(Axis::X, {Coefficient::pulse(1.0, 0.5, 0.2), Coefficient::constant(0.0),
                             Coefficient::ramp(0.0, 1.0, 2.0)});
    for (double t : {0.0, 0.4, 1.3}) {
        auto joined = a.snapshot(t);
        const auto tail = b.snapshot(t);
        joined.insert(joined.end(), tail.begin(), tail.end());
        CHECK(sum.snapshot(t) == joined);
    }
}

TEST_CASE("gaussian pulse coefficient") {
    const auto c = Coefficient::pulse(2.0, 1.0, 0.5);
    CHECK(c.at(1.0) == Catch::Approx(2.0));
    CHECK(c.at(1.5) == Catch::Approx(2.0 * std::exp(-0.5)));
    CHECK_FALSE(c.is_time_independent());
}
