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

#include "qchain/error.hpp"

namespace qchain {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::UnknownKey:
        return "UnknownKey";
    case ErrorKind::MissingRequiredKey:
        return "MissingRequiredKey";
    case ErrorKind::ValueOutOfRange:
        return "ValueOutOfRange";
    case ErrorKind::ConflictingKeys:
        return "ConflictingKeys";
    case ErrorKind::SyntaxError:
        return "SyntaxError";
    case ErrorKind::UnknownGate:
        return "UnknownGate";
    case ErrorKind::QubitOutOfRange:
        return "QubitOutOfRange";
    case ErrorKind::TooLarge:
        return "TooLarge";
    case ErrorKind::SingularSystem:
        return "SingularSystem";
    case ErrorKind::BasisMismatch:
        return "BasisMismatch";
    case ErrorKind::ZeroOverlap:
        return "ZeroOverlap";
    case ErrorKind::Unsupported:
        return "Unsupported";
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    case ErrorKind::IoError:
        return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

namespace {
std::string with_line(std::size_t line, const std::string &message) {
    if (line == 0) {
        return message;
    }
    return "line " + std::to_string(line) + ": " + message;
}
} // namespace

ParseError::ParseError(ErrorKind kind, std::size_t line,
                       const std::string &message)
    : Error(kind, with_line(line, message)), line_(line) {}

} // namespace qchain
