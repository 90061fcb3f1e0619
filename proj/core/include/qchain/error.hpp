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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qchain {

/// Error categories surfaced by the library. The command-line tool maps each
/// category onto a distinct exit code.
enum class ErrorKind {
    UnknownKey,
    MissingRequiredKey,
    ValueOutOfRange,
    ConflictingKeys,
    SyntaxError,
    UnknownGate,
    QubitOutOfRange,
    TooLarge,
    SingularSystem,
    BasisMismatch,
    ZeroOverlap,
    Unsupported,
    InvalidArgument,
    IoError,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Error tied to a line of a text input (input files, circuit text).
/// `line()` is 1-based; 0 means the error is not attributable to one line.
class ParseError : public Error {
  public:
    ParseError(ErrorKind kind, std::size_t line, const std::string &message);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qchain
