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

#pragma once

#include <string>
#include <string_view>

#include "qchain/program.hpp"

namespace qchain {

/// OpenQASM-2.0-style text:
///
///   OPENQASM 2.0;
///   include "qelib1.inc";
///   qreg q[2];
///   creg c[2];            (measured programs only)
///   h q[0];
///   rz(0.5) q[1];
///   cx q[0],q[1];
///   measure q -> c;       (measured programs only)
///
/// Angles carry 17 significant digits, so export -> import -> export is
/// byte-identical.
[[nodiscard]] std::string export_text(const Program &p);

/// Reads the dialect written by export_text. `//` comments and blank lines are
/// ignored. Throws ParseError with kind SyntaxError, UnknownGate or
/// QubitOutOfRange.
[[nodiscard]] Program import_text(std::string_view text);

} // namespace qchain
