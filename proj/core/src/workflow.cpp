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

#include "qchain/workflow.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "qchain/hamiltonian.hpp"
#include "qchain/measurement.hpp"
#include "qchain/optimizer.hpp"
#include "qchain/oracle.hpp"
#include "qchain/qasm.hpp"
#include "qchain/qite.hpp"
#include "qchain/statevector.hpp"
#include "qchain/trotter.hpp"
#include "text_util.hpp"

#ifndef QCHAIN_VERSION_STRING
#define QCHAIN_VERSION_STRING "0.0.0"
#endif

namespace qchain {

namespace {

std::vector<PauliTerm> observable_terms(const SimulationConfig &config,
                                        const HeisenbergHamiltonian &h,
                                        double t) {
    switch (config.observable.kind) {
    case ObservableKind::ExcitationDisplacement:
        return excitation_displacement_observable(config.num_spins);
    case ObservableKind::Energy:
        return energy_observable(h, t);
    case ObservableKind::Magnetization:
        return magnetization_observable(config.num_spins, config.observable.axis);
    }
    return {};
}

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any worker is rethrown on the caller.
template <class F>
void parallel_for(std::size_t count, std::size_t threads, F &&body) {
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next.store(count);
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

void require_supported(const SimulationConfig &config) {
    if (config.constant_depth) {
        throw Error(ErrorKind::Unsupported,
                    "constant_depth: True requests constant-depth circuit "
                    "synthesis, which this build does not provide; set "
                    "constant_depth: False to use Trotter circuits");
    }
}

std::uint64_t effective_seed(const SimulationConfig &config) {
    return config.rng_seed.value_or(0);
}

/// Compiled program for timestep k: state preparation plus k Trotter steps,
/// lowered to the native set and optimized when requested.
Program compiled_step(const SimulationConfig &config,
                      const HeisenbergHamiltonian &h,
                      const std::vector<SpinState> &spins, std::size_t k) {
    const TrotterParams params{config.total_time, config.num_steps};
    Program p = lower_to_native(build_evolution_program(h, params, k, spins));
    if (config.optimizer_level == OptimizerLevel::Peephole) {
        p = optimize(p);
    }
    return p;
}

SeriesMetadata metadata_for(const SimulationConfig &config) {
    return {to_string(config.observable), config_hash(config),
            effective_seed(config)};
}

ResultSeries simulate_real_time(const SimulationConfig &config,
                                const RunOptions &options,
                                const HeisenbergHamiltonian &h,
                                std::vector<Program> *programs) {
    const auto spins = config.initial_state.expand(config.num_spins);
    const std::size_t steps = config.num_steps;
    const double dt = config.step_size();
    const std::uint64_t seed = effective_seed(config);

    std::vector<SeriesPoint> points(steps + 1);
    std::vector<Program> compiled(steps + 1);
    parallel_for(steps + 1, options.threads, [&](std::size_t k) {
        compiled[k] = compiled_step(config, h, spins, k);
        const double t = dt * static_cast<double>(k);
        const Statevector state = run_statevector(compiled[k]);
        const auto obs = observable_terms(config, h, t);
        points[k].axis = t;
        if (config.shots == 0) {
            points[k].value = expectation(state, obs);
        } else {
            const auto est =
                estimate_with_shots(state, obs, config.shots, mix_seed(seed, k));
            points[k].value = est.value;
            points[k].sigma = est.sigma;
        }
    });

    if (options.ground_truth) {
        const Statevector initial = run_statevector(state_preparation(spins));
        const auto states = evolve_exact_series(h, config.total_time, steps,
                                                initial,
                                                options.reference_substeps);
        for (std::size_t k = 0; k <= steps; ++k) {
            points[k].reference =
                expectation(states[k], observable_terms(config, h, points[k].axis));
        }
    }

    ResultSeries series("t", metadata_for(config));
    for (const auto &p : points) {
        series.push(p);
    }
    if (programs != nullptr) {
        *programs = std::move(compiled);
    }
    return series;
}

ResultSeries simulate_imaginary_time(const SimulationConfig &config,
                                     const RunOptions &options,
                                     const HeisenbergHamiltonian &h,
                                     std::vector<Program> *programs) {
    if (config.observable.kind != ObservableKind::Energy) {
        throw Error(ErrorKind::Unsupported,
                    "imaginary-time runs record the energy; set observable: "
                    "energy");
    }
    QiteParams params;
    params.dbeta = config.step_size();
    params.num_steps = config.num_steps;
    params.domain_radius = config.qite_domain_radius;
    params.regularization = config.qite_regularization;
    params.shots = config.shots;
    params.seed = effective_seed(config);
    const auto spins = config.initial_state.expand(config.num_spins);
    const QiteResult result = run_qite(h, params, spins);

    std::optional<double> reference;
    if (options.ground_truth) {
        reference = ground_state(h.snapshot(0.0), config.num_spins).energy;
    }
    ResultSeries series("beta", metadata_for(config));
    SeriesPoint first;
    first.axis = 0.0;
    first.value = result.initial_energy;
    first.reference = reference;
    if (config.shots > 0) {
        first.sigma = 0.0;
    }
    series.push(first);
    for (const auto &r : result.reports) {
        SeriesPoint p;
        p.axis = params.dbeta * static_cast<double>(r.step);
        p.value = r.energy;
        if (config.shots > 0) {
            p.sigma = r.energy_sigma;
        }
        p.reference = reference;
        series.push(p);
    }
    if (programs != nullptr) {
        programs->assign(1, result.circuit);
    }
    return series;
}

ResultSeries simulate_impl(const SimulationConfig &config,
                           const RunOptions &options,
                           std::vector<Program> *programs) {
    require_supported(config);
    validate(config);
    const HeisenbergHamiltonian h = build_hamiltonian(config);
    if (config.mode == EvolutionMode::RealTime) {
        return simulate_real_time(config, options, h, programs);
    }
    return simulate_imaginary_time(config, options, h, programs);
}

nlohmann::ordered_json config_echo(const SimulationConfig &config) {
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    const std::string text = serialize(config);
    for (auto line : detail::lines(text)) {
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            continue;
        }
        echo[std::string(detail::trim(line.substr(0, colon)))] =
            std::string(detail::trim(line.substr(colon + 1)));
    }
    return echo;
}

std::string step_file_name(std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "step_%04zu.qasm", k);
    return buf;
}

} // namespace

std::string_view version() noexcept { return QCHAIN_VERSION_STRING; }

SimulationConfig apply_overrides(SimulationConfig config,
                                 const RunOptions &options) {
    if (options.seed) {
        config.rng_seed = options.seed;
    }
    if (options.shots) {
        config.shots = *options.shots;
    }
    return config;
}

std::filesystem::path resolve_output_dir(const SimulationConfig &config,
                                         const RunOptions &options) {
    if (options.out_dir && !options.out_dir->empty()) {
        return *options.out_dir;
    }
    if (!config.output_dir.empty()) {
        return config.output_dir;
    }
    if (const char *env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    return kDefaultOutputDir;
}

std::string config_hash(const SimulationConfig &config) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a(serialize(config))));
    return buf;
}

ResultSeries simulate(const SimulationConfig &config, const RunOptions &options) {
    if (config.backend_mode == BackendMode::ExportOnly) {
        throw Error(ErrorKind::Unsupported,
                    "export-only configurations produce circuits, not results");
    }
    return simulate_impl(config, options, nullptr);
}

RunArtifacts run_workflow(const SimulationConfig &input, const RunOptions &options) {
    const SimulationConfig config = apply_overrides(input, options);
    require_supported(config);
    validate(config);

    RunArtifacts out;
    out.output_dir = resolve_output_dir(config, options);
    const bool export_only = config.backend_mode == BackendMode::ExportOnly;
    const bool write_circuits = options.export_circuits || export_only;

    std::vector<Program> programs;
    if (export_only && config.mode == EvolutionMode::RealTime) {
        const HeisenbergHamiltonian h = build_hamiltonian(config);
        const auto spins = config.initial_state.expand(config.num_spins);
        programs.resize(config.num_steps + 1);
        parallel_for(programs.size(), options.threads, [&](std::size_t k) {
            programs[k] = compiled_step(config, h, spins, k);
        });
    } else {
        // Imaginary-time circuits depend on measured expectation values, so
        // the fit runs even when only the circuit is requested.
        out.series = simulate_impl(config, options, &programs);
    }

    std::vector<std::string> written;
    auto emit = [&](const std::string &relative, const std::string &text) {
        const auto path = out.output_dir / relative;
        write_text_file(path, text);
        out.files.push_back(path);
        written.push_back(relative);
    };

    if (out.series && !export_only) {
        emit("series.csv", format_csv(*out.series));
        emit("series.svg", render_svg(*out.series));
    }
    if (write_circuits) {
        const bool measured = config.shots > 0;
        for (std::size_t k = 0; k < programs.size(); ++k) {
            Program p = programs[k];
            p.set_measured(measured);
            const std::string name = config.mode == EvolutionMode::RealTime
                                         ? step_file_name(k)
                                         : std::string("qite.qasm");
            emit("circuits/" + name, export_text(p));
        }
    }

    nlohmann::ordered_json manifest;
    manifest["tool"] = "qchain";
    manifest["version"] = std::string(version());
    manifest["mode"] =
        config.mode == EvolutionMode::RealTime ? "real-time" : "imaginary-time";
    manifest["observable"] = to_string(config.observable);
    manifest["seed"] = effective_seed(config);
    manifest["shots"] = config.shots;
    manifest["config_hash"] = config_hash(config);
    manifest["ground_truth"] = options.ground_truth;
    manifest["config"] = config_echo(config);
    manifest["outputs"] = written;
    emit("manifest.json", manifest.dump(2) + "\n");
    return out;
}

ExitCode exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::UnknownKey:
    case ErrorKind::MissingRequiredKey:
    case ErrorKind::ValueOutOfRange:
    case ErrorKind::ConflictingKeys:
    case ErrorKind::SyntaxError:
        return ExitCode::ConfigError;
    case ErrorKind::Unsupported:
        return ExitCode::Unsupported;
    case ErrorKind::TooLarge:
        return ExitCode::TooLarge;
    case ErrorKind::IoError:
        return ExitCode::IoError;
    default:
        return ExitCode::Failure;
    }
}

} // namespace qchain
