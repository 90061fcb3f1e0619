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

#include "qchain/qasm.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>

#include "qchain/error.hpp"
#include "text_util.hpp"

namespace qchain {

std::string export_text(const Program &p) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << p.num_qubits() << "];\n";
    if (p.measured()) {
        out << "creg c[" << p.num_qubits() << "];\n";
    }
    for (const auto &g : p.gates()) {
        out << gate_name(g.kind);
        if (g.is_parametric()) {
            out << "(" << detail::format_double(g.angle) << ")";
        }
        out << " q[" << g.qubits[0] << "]";
        if (g.arity() == 2) {
            out << ",q[" << g.qubits[1] << "]";
        }
        out << ";\n";
    }
    if (p.measured()) {
        out << "measure q -> c;\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void syntax(std::size_t line, const std::string &what) {
    throw ParseError(ErrorKind::SyntaxError, line, what);
}

bool is_ident(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

/// Parses `q[<index>]` at the front of `s`, advancing it.
std::size_t parse_operand(std::string_view &s, std::size_t line) {
    s = detail::trim(s);
    if (!s.starts_with("q[")) {
        syntax(line, "expected operand 'q[i]'");
    }
    const auto close = s.find(']');
    if (close == std::string_view::npos) {
        syntax(line, "unterminated operand");
    }
    auto index = detail::parse_uint(s.substr(2, close - 2));
    if (!index) {
        syntax(line, "invalid qubit index '" +
                         std::string(s.substr(2, close - 2)) + "'");
    }
    s.remove_prefix(close + 1);
    return static_cast<std::size_t>(*index);
}

} // namespace

Program import_text(std::string_view text) {
    const auto all = detail::lines(text);
    std::optional<Program> program;
    bool header = false;
    bool creg = false;
    bool measured = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t lineno = i + 1;
        auto line = all[i];
        if (const auto c = line.find("//"); c != std::string_view::npos) {
            line = line.substr(0, c);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        if (!header) {
            if (line != "OPENQASM 2.0;") {
                syntax(lineno, "expected 'OPENQASM 2.0;' header");
            }
            header = true;
            continue;
        }
        if (line.starts_with("include ")) {
            if (line != "include \"qelib1.inc\";") {
                syntax(lineno, "unsupported include");
            }
            continue;
        }
        if (line.back() != ';') {
            syntax(lineno, "missing ';'");
        }
        line.remove_suffix(1);
        line = detail::trim(line);
        if (measured) {
            syntax(lineno, "statement after terminal measurement");
        }
        if (line.starts_with("qreg ")) {
            if (program) {
                syntax(lineno, "duplicate qreg");
            }
            auto rest = detail::trim(line.substr(5));
            if (!rest.starts_with("q[") || rest.back() != ']') {
                syntax(lineno, "expected 'qreg q[n];'");
            }
            auto n = detail::parse_uint(rest.substr(2, rest.size() - 3));
            if (!n) {
                syntax(lineno, "invalid register size");
            }
            program.emplace(static_cast<std::size_t>(*n));
            continue;
        }
        if (!program) {
            syntax(lineno, "gate before qreg declaration");
        }
        if (line.starts_with("creg ")) {
            if (creg) {
                syntax(lineno, "duplicate creg");
            }
            const std::string expected =
                "creg c[" + std::to_string(program->num_qubits()) + "]";
            if (line != expected) {
                syntax(lineno, "expected '" + expected + ";'");
            }
            creg = true;
            continue;
        }
        if (line.starts_with("measure")) {
            if (!creg || line != "measure q -> c") {
                syntax(lineno, "expected 'measure q -> c;' after a creg");
            }
            measured = true;
            program->set_measured(true);
            continue;
        }

        std::size_t pos = 0;
        while (pos < line.size() && is_ident(line[pos])) {
            ++pos;
        }
        if (pos == 0) {
            syntax(lineno, "expected a gate name");
        }
        const auto name = line.substr(0, pos);
        auto rest = line.substr(pos);
        if (rest.empty() || (rest.front() != '(' && rest.front() != ' ' &&
                             rest.front() != '\t')) {
            syntax(lineno, "malformed statement '" + std::string(line) + "'");
        }
        const auto kind = gate_kind_from_name(name);
        if (!kind) {
            throw ParseError(ErrorKind::UnknownGate, lineno,
                             "unknown gate '" + std::string(name) + "'");
        }
        Gate g{*kind, {0, 0}, 0.0};
        if (rest.front() == '(') {
            if (!is_parametric(*kind)) {
                syntax(lineno, std::string(name) + " takes no parameter");
            }
            const auto close = rest.find(')');
            if (close == std::string_view::npos) {
                syntax(lineno, "unterminated parameter list");
            }
            auto angle = detail::parse_double(detail::trim(rest.substr(1, close - 1)));
            if (!angle || !std::isfinite(*angle)) {
                syntax(lineno, "invalid angle '" +
                                   std::string(rest.substr(1, close - 1)) + "'");
            }
            g.angle = *angle;
            rest.remove_prefix(close + 1);
        } else if (is_parametric(*kind)) {
            syntax(lineno, std::string(name) + " requires an angle");
        }
        g.qubits[0] = parse_operand(rest, lineno);
        g.qubits[1] = g.qubits[0];
        if (g.arity() == 2) {
            rest = detail::trim(rest);
            if (rest.empty() || rest.front() != ',') {
                syntax(lineno, "expected ',' between operands");
            }
            rest.remove_prefix(1);
            g.qubits[1] = parse_operand(rest, lineno);
        }
        if (!detail::trim(rest).empty()) {
            syntax(lineno, "trailing characters '" + std::string(rest) + "'");
        }
        for (std::size_t k = 0; k < g.arity(); ++k) {
            if (g.qubits[k] >= program->num_qubits()) {
                throw ParseError(ErrorKind::QubitOutOfRange, lineno,
                                 "qubit " + std::to_string(g.qubits[k]) +
                                     " outside qreg of size " +
                                     std::to_string(program->num_qubits()));
            }
        }
        if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
            syntax(lineno, "two-qubit gate on a single qubit");
        }
        program->append(g);
    }
    if (!header) {
        syntax(0, "empty circuit text");
    }
    if (!program) {
        syntax(0, "missing qreg declaration");
    }
    return *program;
}

} // namespace qchain
