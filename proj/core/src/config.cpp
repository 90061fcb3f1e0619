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

#include "qchain/config.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "qchain/error.hpp"
#include "text_util.hpp"

namespace qchain {

namespace {

constexpr std::array<std::string_view, 3> kCouplingKeys = {"J_x", "J_y", "J_z"};
constexpr std::array<std::string_view, 3> kFieldKeys = {"h_x", "h_y", "h_z"};

struct Entry {
    std::string value;
    std::size_t line;
};

[[noreturn]] void out_of_range(std::string_view key, std::string_view value,
                               std::size_t line, const std::string &why) {
    throw ParseError(ErrorKind::ValueOutOfRange, line,
                     std::string(key) + " = '" + std::string(value) +
                         "': " + why);
}

std::uint64_t parse_count(std::string_view key, const Entry &e,
                          std::uint64_t minimum) {
    auto v = detail::parse_uint(e.value);
    if (!v) {
        out_of_range(key, e.value, e.line, "expected a nonnegative integer");
    }
    if (*v < minimum) {
        out_of_range(key, e.value, e.line,
                     "must be >= " + std::to_string(minimum));
    }
    return *v;
}

double parse_nonnegative(std::string_view key, const Entry &e) {
    auto v = detail::parse_double(e.value);
    if (!v || !std::isfinite(*v)) {
        out_of_range(key, e.value, e.line, "expected a finite number");
    }
    if (*v < 0.0) {
        out_of_range(key, e.value, e.line, "must be >= 0");
    }
    return *v;
}

bool parse_bool(std::string_view key, const Entry &e) {
    const auto v = detail::lower(e.value);
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    out_of_range(key, e.value, e.line, "expected True or False");
}

std::optional<Axis> parse_axis(std::string_view s) {
    if (s == "x") {
        return Axis::X;
    }
    if (s == "y") {
        return Axis::Y;
    }
    if (s == "z") {
        return Axis::Z;
    }
    return std::nullopt;
}

ObservableSpec parse_observable(const Entry &e) {
    const auto v = detail::lower(e.value);
    if (v == "excitation-displacement") {
        return {ObservableKind::ExcitationDisplacement, Axis::Z};
    }
    if (v == "energy") {
        return {ObservableKind::Energy, Axis::Z};
    }
    if (v == "magnetization") {
        return {ObservableKind::Magnetization, Axis::Z};
    }
    const std::string prefix = "magnetization(";
    if (v.starts_with(prefix) && v.ends_with(")")) {
        auto axis = parse_axis(
            detail::trim(std::string_view(v).substr(
                prefix.size(), v.size() - prefix.size() - 1)));
        if (axis) {
            return {ObservableKind::Magnetization, *axis};
        }
    }
    out_of_range("observable", e.value, e.line,
                 "expected excitation-displacement, energy or "
                 "magnetization(x|y|z)");
}

InitialState parse_initial_state(const Entry &e) {
    const auto v = detail::lower(e.value);
    if (v == "all-up") {
        return {InitialState::Preset::AllUp, {}};
    }
    if (v == "flip-first") {
        return {InitialState::Preset::FlipFirst, {}};
    }
    InitialState state{InitialState::Preset::Explicit, {}};
    for (auto piece : detail::split(v, ',')) {
        if (piece == "up" || piece == "u" || piece == "0") {
            state.spins.push_back(SpinState::Up);
        } else if (piece == "down" || piece == "d" || piece == "1") {
            state.spins.push_back(SpinState::Down);
        } else {
            out_of_range("initial_state", e.value, e.line,
                         "expected all-up, flip-first or a comma-separated "
                         "list of up/down");
        }
    }
    return state;
}

std::string format_initial_state(const InitialState &s) {
    switch (s.preset) {
    case InitialState::Preset::AllUp:
        return "all-up";
    case InitialState::Preset::FlipFirst:
        return "flip-first";
    case InitialState::Preset::Explicit:
        break;
    }
    std::string out;
    for (std::size_t i = 0; i < s.spins.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += s.spins[i] == SpinState::Up ? "up" : "down";
    }
    return out;
}

std::size_t schedule_length(const CoefficientSchedule &s) {
    if (const auto *p = std::get_if<PerIndexSchedule>(&s)) {
        return p->values.size();
    }
    return 0;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::string to_string(const ObservableSpec &obs) {
    switch (obs.kind) {
    case ObservableKind::ExcitationDisplacement:
        return "excitation-displacement";
    case ObservableKind::Energy:
        return "energy";
    case ObservableKind::Magnetization:
        return std::string("magnetization(") + axis_char(obs.axis) + ")";
    }
    return "unknown";
}

std::vector<SpinState> InitialState::expand(std::size_t num_spins) const {
    switch (preset) {
    case Preset::AllUp:
        return std::vector<SpinState>(num_spins, SpinState::Up);
    case Preset::FlipFirst: {
        std::vector<SpinState> out(num_spins, SpinState::Up);
        if (num_spins > 0) {
            out[0] = SpinState::Down;
        }
        return out;
    }
    case Preset::Explicit:
        break;
    }
    return spins;
}

const std::vector<std::string_view> &known_keys() {
    static const std::vector<std::string_view> keys = {
        "num_spins",     "boundary",        "J_x",
        "J_y",           "J_z",             "h_x",
        "h_y",           "h_z",             "initial_state",
        "mode",          "total_time",      "num_steps",
        "QCQS",          "shots",           "observable",
        "optimizer_level", "constant_depth", "rng_seed",
        "output_dir",    "qite_domain_radius", "qite_regularization",
    };
    return keys;
}

void validate(const SimulationConfig &c) {
    if (c.num_spins < 1) {
        throw ParseError(ErrorKind::ValueOutOfRange, 0, "num_spins must be >= 1");
    }
    if (c.num_spins > 64) {
        throw ParseError(ErrorKind::ValueOutOfRange, 0,
                         "num_spins must be <= 64");
    }
    if (c.num_steps < 1) {
        throw ParseError(ErrorKind::ValueOutOfRange, 0, "num_steps must be >= 1");
    }
    if (!(c.total_time >= 0.0) || !std::isfinite(c.total_time)) {
        throw ParseError(ErrorKind::ValueOutOfRange, 0,
                         "total_time must be finite and >= 0");
    }
    if (!(c.qite_regularization >= 0.0) ||
        !std::isfinite(c.qite_regularization)) {
        throw ParseError(ErrorKind::ValueOutOfRange, 0,
                         "qite_regularization must be finite and >= 0");
    }
    const std::size_t bonds = c.num_spins - 1;
    for (std::size_t a = 0; a < 3; ++a) {
        const auto len = schedule_length(c.couplings[a]);
        if (len != 0 && len != bonds) {
            throw ParseError(ErrorKind::ConflictingKeys, 0,
                             std::string(kCouplingKeys[a]) + " lists " +
                                 std::to_string(len) + " bonds but num_spins " +
                                 std::to_string(c.num_spins) + " has " +
                                 std::to_string(bonds));
        }
        const auto flen = schedule_length(c.fields[a]);
        if (flen != 0 && flen != c.num_spins) {
            throw ParseError(ErrorKind::ConflictingKeys, 0,
                             std::string(kFieldKeys[a]) + " lists " +
                                 std::to_string(flen) +
                                 " sites but num_spins is " +
                                 std::to_string(c.num_spins));
        }
        if (std::holds_alternative<PerIndexSchedule>(c.couplings[a]) &&
            len == 0 && bonds != 0) {
            throw ParseError(ErrorKind::ConflictingKeys, 0,
                             std::string(kCouplingKeys[a]) + " is empty");
        }
    }
    if (c.initial_state.preset == InitialState::Preset::Explicit &&
        c.initial_state.spins.size() != c.num_spins) {
        throw ParseError(ErrorKind::ConflictingKeys, 0,
                         "initial_state lists " +
                             std::to_string(c.initial_state.spins.size()) +
                             " spins but num_spins is " +
                             std::to_string(c.num_spins));
    }
}

SimulationConfig parse_input(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    const auto all_lines = detail::lines(text);
    for (std::size_t i = 0; i < all_lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        auto line = detail::trim(all_lines[i]);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = detail::trim(line.substr(0, hash));
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(ErrorKind::SyntaxError, lineno,
                             "expected 'key: value', got '" +
                                 std::string(line) + "'");
        }
        const auto key = std::string(detail::trim(line.substr(0, colon)));
        const auto value = std::string(detail::trim(line.substr(colon + 1)));
        bool known = false;
        for (auto k : known_keys()) {
            known = known || k == key;
        }
        if (!known) {
            throw ParseError(ErrorKind::UnknownKey, lineno,
                             "unknown key '" + key + "'");
        }
        if (value.empty()) {
            throw ParseError(ErrorKind::ValueOutOfRange, lineno,
                             "key '" + key + "' has no value");
        }
        if (auto it = entries.find(key); it != entries.end()) {
            throw ParseError(ErrorKind::ConflictingKeys, lineno,
                             "key '" + key + "' already set on line " +
                                 std::to_string(it->second.line));
        }
        entries.emplace(key, Entry{value, lineno});
    }

    auto get = [&](std::string_view key) -> const Entry * {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    SimulationConfig c;
    const Entry *n = get("num_spins");
    if (n == nullptr) {
        throw ParseError(ErrorKind::MissingRequiredKey, 0,
                         "required key 'num_spins' is missing");
    }
    c.num_spins = parse_count("num_spins", *n, 1);

    if (const Entry *e = get("boundary")) {
        if (detail::lower(e->value) != "open") {
            out_of_range("boundary", e->value, e->line,
                         "only open boundary conditions are supported");
        }
    }

    auto schedule = [&](std::string_view key) -> CoefficientSchedule {
        const Entry *e = get(key);
        if (e == nullptr) {
            return ConstantSchedule{0.0};
        }
        auto parsed = parse_schedule(e->value);
        if (auto *err = std::get_if<std::string>(&parsed)) {
            out_of_range(key, e->value, e->line, *err);
        }
        auto s = std::get<CoefficientSchedule>(std::move(parsed));
        const std::size_t expected =
            key.front() == 'J' ? c.num_spins - 1 : c.num_spins;
        const auto len = schedule_length(s);
        if (std::holds_alternative<PerIndexSchedule>(s) && len != expected) {
            throw ParseError(ErrorKind::ConflictingKeys, e->line,
                             std::string(key) + " lists " +
                                 std::to_string(len) + " values, expected " +
                                 std::to_string(expected) + " for num_spins " +
                                 std::to_string(c.num_spins));
        }
        return s;
    };
    for (std::size_t a = 0; a < 3; ++a) {
        c.couplings[a] = schedule(kCouplingKeys[a]);
        c.fields[a] = schedule(kFieldKeys[a]);
    }

    if (const Entry *e = get("initial_state")) {
        c.initial_state = parse_initial_state(*e);
        if (c.initial_state.preset == InitialState::Preset::Explicit &&
            c.initial_state.spins.size() != c.num_spins) {
            throw ParseError(ErrorKind::ConflictingKeys, e->line,
                             "initial_state lists " +
                                 std::to_string(c.initial_state.spins.size()) +
                                 " spins, expected " +
                                 std::to_string(c.num_spins));
        }
    }
    if (const Entry *e = get("mode")) {
        const auto v = detail::lower(e->value);
        if (v == "real-time" || v == "real") {
            c.mode = EvolutionMode::RealTime;
        } else if (v == "imaginary-time" || v == "imaginary") {
            c.mode = EvolutionMode::ImaginaryTime;
        } else {
            out_of_range("mode", e->value, e->line,
                         "expected real-time or imaginary-time");
        }
    }
    if (const Entry *e = get("total_time")) {
        c.total_time = parse_nonnegative("total_time", *e);
    }
    if (const Entry *e = get("num_steps")) {
        c.num_steps = parse_count("num_steps", *e, 1);
    }
    if (const Entry *e = get("QCQS")) {
        const auto v = detail::lower(e->value);
        if (v == "qs") {
            c.backend_mode = BackendMode::StatevectorSimulator;
        } else if (v == "export-only") {
            c.backend_mode = BackendMode::ExportOnly;
        } else if (v == "qc") {
            out_of_range("QCQS", e->value, e->line,
                         "execution on cloud hardware is not available; use "
                         "QS or export-only");
        } else {
            out_of_range("QCQS", e->value, e->line,
                         "expected QS or export-only");
        }
    }
    if (const Entry *e = get("shots")) {
        c.shots = parse_count("shots", *e, 0);
    }
    if (const Entry *e = get("observable")) {
        c.observable = parse_observable(*e);
    }
    if (const Entry *e = get("optimizer_level")) {
        const auto v = detail::lower(e->value);
        if (v == "none") {
            c.optimizer_level = OptimizerLevel::None;
        } else if (v == "peephole") {
            c.optimizer_level = OptimizerLevel::Peephole;
        } else {
            out_of_range("optimizer_level", e->value, e->line,
                         "expected none or peephole");
        }
    }
    if (const Entry *e = get("constant_depth")) {
        c.constant_depth = parse_bool("constant_depth", *e);
    }
    if (const Entry *e = get("rng_seed")) {
        c.rng_seed = parse_count("rng_seed", *e, 0);
    }
    if (const Entry *e = get("output_dir")) {
        c.output_dir = e->value;
    }
    if (const Entry *e = get("qite_domain_radius")) {
        c.qite_domain_radius = parse_count("qite_domain_radius", *e, 0);
    }
    if (const Entry *e = get("qite_regularization")) {
        c.qite_regularization = parse_nonnegative("qite_regularization", *e);
    }
    validate(c);
    return c;
}

std::string serialize(const SimulationConfig &c) {
    std::ostringstream out;
    out << "num_spins: " << c.num_spins << "\n";
    out << "boundary: open\n";
    for (std::size_t a = 0; a < 3; ++a) {
        out << kCouplingKeys[a] << ": " << format_schedule(c.couplings[a])
            << "\n";
    }
    for (std::size_t a = 0; a < 3; ++a) {
        out << kFieldKeys[a] << ": " << format_schedule(c.fields[a]) << "\n";
    }
    out << "initial_state: " << format_initial_state(c.initial_state) << "\n";
    out << "mode: "
        << (c.mode == EvolutionMode::RealTime ? "real-time" : "imaginary-time")
        << "\n";
    out << "total_time: " << detail::format_double(c.total_time) << "\n";
    out << "num_steps: " << c.num_steps << "\n";
    out << "QCQS: "
        << (c.backend_mode == BackendMode::StatevectorSimulator ? "QS"
                                                                : "export-only")
        << "\n";
    out << "shots: " << c.shots << "\n";
    out << "observable: " << to_string(c.observable) << "\n";
    out << "optimizer_level: "
        << (c.optimizer_level == OptimizerLevel::None ? "none" : "peephole")
        << "\n";
    out << "constant_depth: " << (c.constant_depth ? "True" : "False") << "\n";
    if (c.rng_seed) {
        out << "rng_seed: " << *c.rng_seed << "\n";
    }
    if (!c.output_dir.empty()) {
        out << "output_dir: " << c.output_dir << "\n";
    }
    out << "qite_domain_radius: " << c.qite_domain_radius << "\n";
    out << "qite_regularization: "
        << detail::format_double(c.qite_regularization) << "\n";
    return out.str();
}

HeisenbergHamiltonian build_hamiltonian(const SimulationConfig &c) {
    validate(c);
    HeisenbergHamiltonian h(c.num_spins);
    const std::uint64_t base = c.rng_seed.value_or(0);
    for (std::size_t a = 0; a < 3; ++a) {
        const Axis axis = kAxes[a];
        h.set_bonds(axis, resolve_schedule(c.couplings[a], h.num_bonds(),
                                           c.total_time,
                                           splitmix64(base ^ (a + 1))));
        h.set_fields(axis, resolve_schedule(c.fields[a], c.num_spins,
                                            c.total_time,
                                            splitmix64(base ^ (a + 4))));
    }
    return h;
}

} // namespace qchain
