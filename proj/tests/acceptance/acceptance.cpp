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

// Acceptance suite. Each criterion prints one PASS/FAIL line with the
// measured numbers. Usage: qchain_acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz.hpp"
#include "qchain/config.hpp"
#include "qchain/observables.hpp"
#include "qchain/optimizer.hpp"
#include "qchain/oracle.hpp"
#include "qchain/qasm.hpp"
#include "qchain/qite.hpp"
#include "qchain/statevector.hpp"
#include "qchain/trotter.hpp"
#include "qchain/workflow.hpp"
#include "support.hpp"

using namespace qchain;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
        }
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what + (ok ? "" : " [violated]");
    }
};

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// 1. QITE convergence on the three-spin TFIM.
Outcome qite_convergence() {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    const auto h = HeisenbergHamiltonian::tfim(3, 1.0, 1.0);
    const double e0 = ground_state(h.snapshot(0.0), 3).energy;
    using S = SpinState;
    const std::vector<std::vector<SpinState>> initial = {
        {S::Up, S::Up, S::Up},
        {S::Down, S::Up, S::Up},
        {S::Up, S::Down, S::Up},
        {S::Down, S::Down, S::Down},
    };
    QiteParams params;
    params.dbeta = 0.3;
    params.num_steps = 8;
    params.domain_radius = 1;
    double worst = 0.0;
    double lo = 1e300;
    double hi = -1e300;
    for (const auto &spins : initial) {
        const auto r = run_qite(h, params, spins);
        const double e8 = r.reports.at(7).energy;
        worst = std::max(worst, std::abs(e8 - e0) / std::abs(e0));
        lo = std::min(lo, e8);
        hi = std::max(hi, e8);
    }
    const double spread = (hi - lo) / std::abs(lo);
    const double elapsed = seconds_since(start);
    out.require(worst <= 0.02, "E0 " + fmt("%.6f", e0) + ", step-8 energies in [" +
                                   fmt("%.6f", lo) + ", " + fmt("%.6f", hi) +
                                   "], worst rel err " + fmt("%.4f", worst) +
                                   " (need <= 0.02)");
    out.require(spread <= 0.01, "spread " + fmt("%.4f", spread) + " (need <= 0.01)");
    out.require(elapsed < 5.0, "runtime " + fmt("%.2f", elapsed) + " s");
    return out;
}

// 2. Localization trend on the five-site XY chain.
Outcome localization() {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    const std::string base = "num_spins: 5\nJ_x: 1\nJ_y: 1\n"
                             "initial_state: flip-first\nmode: real-time\n"
                             "total_time: 3\nnum_steps: 300\n"
                             "observable: excitation-displacement\n";
    RunOptions options;
    options.ground_truth = true;
    options.reference_substeps = 1;

    auto stats = [](const ResultSeries &s, bool reference) {
        double peak = -1e300;
        double mean = 0.0;
        double gap = 0.0;
        for (const auto &p : s.points()) {
            const double v = reference ? *p.reference : p.value;
            peak = std::max(peak, v);
            mean += v / static_cast<double>(s.size());
            gap = std::max(gap, std::abs(p.value - *p.reference));
        }
        return std::array<double, 3>{peak, mean, gap};
    };

    const auto clean = simulate(parse_input(base + "h_z: 0\n"), options);
    const auto disordered =
        simulate(parse_input(base + "h_z: random(-3, 3)\nrng_seed: 5\n"), options);
    const auto c_ref = stats(clean, true);
    const auto c_tro = stats(clean, false);
    const auto d_ref = stats(disordered, true);
    const auto d_tro = stats(disordered, false);
    out.require(c_ref[0] >= 2.5, "oracle b=0 max " + fmt("%.4f", c_ref[0]));
    out.require(d_ref[1] <= 1.0, "oracle disorder mean " + fmt("%.4f", d_ref[1]));
    out.require(c_tro[2] <= 0.05 && d_tro[2] <= 0.05,
                "trotter vs oracle max gap " +
                    fmt("%.4f", std::max(c_tro[2], d_tro[2])));
    out.require(c_tro[0] >= 2.5, "trotter b=0 max " + fmt("%.4f", c_tro[0]));
    out.require(d_tro[1] <= 1.0, "trotter disorder mean " + fmt("%.4f", d_tro[1]));
    const double elapsed = seconds_since(start);
    out.require(elapsed < 10.0, "runtime " + fmt("%.2f", elapsed) + " s");
    return out;
}

// 3. First-order Trotter convergence after a quench into the TFIM.
Outcome trotter_order() {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    // All-up is the ground state of -sum Z; quench into J_z = 1, h_x = 1.
    const auto h = HeisenbergHamiltonian::tfim(3, 1.0, 1.0);
    const std::vector<SpinState> up(3, SpinState::Up);
    const auto initial = run_statevector(state_preparation(up));
    const Eigen::VectorXcd exact = testing::to_vec(evolve_exact(h, 1.0, initial));
    std::vector<double> xs;
    std::vector<double> ys;
    std::string values;
    for (std::size_t n : {10U, 20U, 40U, 80U}) {
        const auto state = run_statevector(build_evolution_program(h, {1.0, n}, n, up));
        const double inf = 1.0 - testing::fidelity(exact, testing::to_vec(state));
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(inf));
        values += (values.empty() ? "" : ", ") + fmt("%.3e", inf);
    }
    const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4.0;
    const double my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4.0;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    const double order = -num / den;
    out.require(order >= 0.9, "infidelities " + values + ", observed order " +
                                  fmt("%.3f", order));
    const double elapsed = seconds_since(start);
    out.require(elapsed < 2.0, "runtime " + fmt("%.2f", elapsed) + " s");
    return out;
}

// 4. Optimizer and lowering preserve semantics.
Outcome semantic_preservation() {
    Outcome out;
    std::mt19937_64 rng(2024);
    double worst_opt = 0.0;
    double worst_low = 0.0;
    bool grew = false;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Program p = testing::random_program(n, 5 + trial % 40, rng);
        const Eigen::MatrixXcd u = unitary_of(p);
        const Program o = optimize(p);
        const Program l = lower_to_native(p);
        grew = grew || o.size() > p.size();
        worst_opt = std::max(worst_opt, testing::phase_distance(u, unitary_of(o)));
        worst_low = std::max(worst_low, testing::phase_distance(u, unitary_of(l)));
    }
    out.require(worst_opt <= 1e-10, "optimize max dist " + fmt("%.2e", worst_opt));
    out.require(worst_low <= 1e-10, "lower max dist " + fmt("%.2e", worst_low));
    out.require(!grew, "gate count never increased");
    return out;
}

// 5. Backend agrees with dense unitaries and samples correctly.
Outcome backend_correctness() {
    Outcome out;
    std::mt19937_64 rng(77);
    double worst = 0.0;
    double drift = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Program p = testing::random_program(n, 5 + trial % 40, rng);
        Statevector s(n);
        for (const auto &g : p.gates()) {
            const double before = s.norm_squared();
            s.apply(g);
            drift = std::max(drift, std::abs(s.norm_squared() - before));
        }
        const Eigen::VectorXcd ref = unitary_of(p).col(0);
        worst = std::max(worst, (testing::to_vec(s) - ref).cwiseAbs().maxCoeff());
    }
    const std::uint64_t shots = 100000;
    double worst_z = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto state = testing::from_vec(testing::random_state(n, rng));
        const Counts counts = sample_counts(state, shots, 500 + trial);
        for (std::size_t i = 0; i < state.dimension(); ++i) {
            std::string key(n, '0');
            for (std::size_t q = 0; q < n; ++q) {
                key[q] = ((i >> (n - 1 - q)) & 1U) != 0 ? '1' : '0';
            }
            const double p = std::norm(state[i]);
            const auto it = counts.find(key);
            const double f = it == counts.end()
                                 ? 0.0
                                 : static_cast<double>(it->second) /
                                       static_cast<double>(shots);
            const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
            if (sigma > 0.0) {
                worst_z = std::max(worst_z, std::abs(f - p) / sigma);
            }
        }
    }
    out.require(worst <= 1e-10, "max amplitude diff " + fmt("%.2e", worst));
    out.require(drift <= 1e-12, "max norm drift per gate " + fmt("%.2e", drift));
    out.require(worst_z <= 5.0, "max sampling deviation " + fmt("%.2f", worst_z) + " sigma");
    return out;
}

// 6. QITE sign calibration on one qubit.
Outcome qite_calibration() {
    Outcome out;
    const PauliTerm z{1.0, {{0, Axis::Z}}};
    const auto plus =
        Statevector::from_amplitudes({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    QiteParams params;
    params.dbeta = 0.1;
    Statevector s = plus;
    s.apply(fit_step_unitary(s, z, params).circuit);
    const double fitted = expectation(s, {z});
    const double exact = evolve_imaginary_exact({z}, 0.1, plus).energy;
    out.require(std::abs(fitted - exact) <= 5e-3,
                "fitted " + fmt("%.6f", fitted) + " vs exact " + fmt("%.6f", exact));
    double previous = fitted;
    bool decreasing = true;
    for (int step = 1; step < 10; ++step) {
        s.apply(fit_step_unitary(s, z, params).circuit);
        const double e = expectation(s, {z});
        decreasing = decreasing && e < previous;
        previous = e;
    }
    out.require(decreasing, "strictly decreasing over 10 steps, final " +
                                fmt("%.6f", previous));
    return out;
}

// 7. Text formats round-trip.
Outcome round_trips() {
    Outcome out;
    std::mt19937_64 rng(99);
    int config_ok = 0;
    for (int i = 0; i < 100; ++i) {
        const auto c = testing::random_config(rng);
        const std::string text = serialize(c);
        const auto back = parse_input(text);
        config_ok += (back == c && serialize(back) == text) ? 1 : 0;
    }
    int circuit_ok = 0;
    for (int i = 0; i < 100; ++i) {
        Program p = testing::random_program(1 + i % 6, i % 30, rng);
        p.set_measured(i % 2 == 0);
        const std::string text = export_text(p);
        const Program back = import_text(text);
        circuit_ok += (back == p && export_text(back) == text) ? 1 : 0;
    }
    ResultSeries series("t", {"energy", "", 0});
    std::normal_distribution<double> g;
    for (int i = 0; i < 100; ++i) {
        series.push({0.01 * i + g(rng) * 1e-4, g(rng) * 1e3,
                     i % 3 == 0 ? std::optional<double>(std::abs(g(rng)) * 1e-7)
                                : std::nullopt,
                     g(rng)});
    }
    const bool csv_ok = parse_csv(format_csv(series)).points() == series.points();
    out.require(config_ok == 100, "configs " + std::to_string(config_ok) + "/100");
    out.require(circuit_ok == 100, "circuits " + std::to_string(circuit_ok) + "/100");
    out.require(csv_ok, "CSV re-read exact");
    return out;
}

// 8. Tutorial runs are byte-identical.
Outcome determinism() {
    Outcome out;
    const fs::path root = fs::temp_directory_path() / "qchain_acceptance";
    for (const std::string name : {"localization", "qite_tfim"}) {
        const auto config =
            parse_input(slurp(fs::path(QCHAIN_TUTORIAL_DIR) / (name + ".in")));
        std::string files[2][2];
        for (int run = 0; run < 2; ++run) {
            RunOptions options;
            options.out_dir = root / (name + "_" + std::to_string(run));
            options.seed = 5;
            options.threads = run == 0 ? 0 : 1;
            fs::remove_all(*options.out_dir);
            (void)run_workflow(config, options);
            files[run][0] = slurp(*options.out_dir / "series.csv");
            files[run][1] = slurp(*options.out_dir / "series.svg");
        }
        out.require(!files[0][0].empty() && files[0][0] == files[1][0] &&
                        files[0][1] == files[1][1],
                    name + " CSV/SVG identical (" +
                        std::to_string(files[0][0].size()) + " + " +
                        std::to_string(files[0][1].size()) + " bytes)");
    }
    return out;
}

struct Criterion {
    int id;
    const char *name;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    const std::vector<Criterion> criteria = {
        {1, "QITE convergence", qite_convergence},
        {2, "localization trend", localization},
        {3, "Trotter convergence order", trotter_order},
        {4, "semantic preservation", semantic_preservation},
        {5, "backend correctness", backend_correctness},
        {6, "QITE sign calibration", qite_calibration},
        {7, "format round trips", round_trips},
        {8, "end-to-end determinism", determinism},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        if (only != 0 && c.id != only) {
            continue;
        }
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d (%s): %s | %s\n", c.id, c.name,
                    o.pass ? "PASS" : "FAIL", o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
