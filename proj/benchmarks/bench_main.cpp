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

#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "qchain/hamiltonian.hpp"
#include "qchain/optimizer.hpp"
#include "qchain/program.hpp"
#include "qchain/qite.hpp"
#include "qchain/statevector.hpp"
#include "qchain/trotter.hpp"

namespace {

using namespace qchain;

HeisenbergHamiltonian heisenberg(std::size_t n) {
    HeisenbergHamiltonian h(n);
    for (Axis a : kAxes) {
        h.set_bonds(a, std::vector<Coefficient>(n - 1, Coefficient::constant(1.0)));
    }
    h.set_fields(Axis::Z, std::vector<Coefficient>(n, Coefficient::constant(0.5)));
    return h;
}

Program evolution(std::size_t n, std::size_t steps) {
    const auto h = heisenberg(n);
    const std::vector<SpinState> spins(n, SpinState::Up);
    return build_evolution_program(h, TrotterParams{1.0, steps}, steps, spins);
}

void BM_StatevectorRun(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Program p = lower_to_native(evolution(n, 10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_statevector(p));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(p.size()));
}
BENCHMARK(BM_StatevectorRun)->DenseRange(4, 16, 4);

void BM_TrotterBuild(benchmark::State &state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    const auto h = heisenberg(8);
    const std::vector<SpinState> spins(8, SpinState::Up);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            build_evolution_program(h, TrotterParams{3.0, steps}, steps, spins));
    }
}
BENCHMARK(BM_TrotterBuild)->RangeMultiplier(4)->Range(16, 1024);

void BM_Optimize(benchmark::State &state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    const Program p = lower_to_native(evolution(8, steps));
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize(p));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(p.size()));
}
BENCHMARK(BM_Optimize)->RangeMultiplier(4)->Range(4, 256);

void BM_QiteStep(benchmark::State &state) {
    const auto radius = static_cast<std::size_t>(state.range(0));
    const auto h = HeisenbergHamiltonian::tfim(6, 1.0, 1.0);
    QiteParams params;
    params.dbeta = 0.1;
    params.num_steps = 1;
    params.domain_radius = radius;
    const std::vector<SpinState> spins(6, SpinState::Up);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_qite(h, params, spins));
    }
}
BENCHMARK(BM_QiteStep)->DenseRange(0, 2, 1);

} // namespace

BENCHMARK_MAIN();
