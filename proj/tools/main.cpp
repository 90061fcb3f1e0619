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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qchain/config.hpp"
#include "qchain/error.hpp"
#include "qchain/workflow.hpp"

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qchain::Error(qchain::ErrorKind::IoError,
                            "cannot open input file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int fail(const qchain::Error &e, const std::string &input) {
    if (const auto *pe = dynamic_cast<const qchain::ParseError *>(&e);
        pe != nullptr && pe->line() > 0) {
        std::cerr << "qchain: " << input << ":" << pe->line() << ": " << e.what()
                  << "\n";
    } else {
        std::cerr << "qchain: " << e.what() << "\n";
    }
    return static_cast<int>(qchain::exit_code_for(e.kind()));
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Spin-chain circuit generation and simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qchain::version()));

    auto *run = app.add_subcommand("run", "Simulate an input file");
    std::string input;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::size_t threads = 0;
    bool export_circuits = false;
    bool ground_truth = false;
    run->add_option("input", input, "Input file")->required();
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--seed", seed, "Random seed (overrides rng_seed)");
    run->add_option("--shots", shots, "Shots per measurement (0: exact)");
    run->add_option("--threads", threads, "Worker threads (0: all cores)");
    run->add_flag("--export", export_circuits, "Write every circuit as text");
    run->add_flag("--ground-truth", ground_truth,
                  "Add an exact reference column");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto config = qchain::parse_input(read_file(input));
        qchain::RunOptions options;
        if (!out_dir.empty()) {
            options.out_dir = out_dir;
        }
        options.seed = seed;
        options.shots = shots;
        options.threads = threads;
        options.export_circuits = export_circuits;
        options.ground_truth = ground_truth;
        const auto artifacts = qchain::run_workflow(config, options);
        for (const auto &f : artifacts.files) {
            std::cout << f.string() << "\n";
        }
    } catch (const qchain::Error &e) {
        return fail(e, input);
    } catch (const std::exception &e) {
        std::cerr << "qchain: " << e.what() << "\n";
        return static_cast<int>(qchain::ExitCode::Failure);
    }
    return 0;
}
