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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qchain {

// Schedule kinds as they appear in an input file. A schedule yields a value
// for every (site or bond index, time) pair.

/// Same value everywhere, at all times.
struct ConstantSchedule {
    double value = 0.0;
    friend bool operator==(const ConstantSchedule &,
                           const ConstantSchedule &) = default;
};

/// One time-independent value per index.
struct PerIndexSchedule {
    std::vector<double> values;
    friend bool operator==(const PerIndexSchedule &,
                           const PerIndexSchedule &) = default;
};

/// start + (end - start) * t / total_time, clamped to the run window.
struct LinearRampSchedule {
    double start = 0.0;
    double end = 0.0;
    friend bool operator==(const LinearRampSchedule &,
                           const LinearRampSchedule &) = default;
};

/// amplitude * exp(-(t - center)^2 / (2 width^2)).
struct GaussianPulseSchedule {
    double amplitude = 0.0;
    double center = 0.0;
    double width = 1.0;
    friend bool operator==(const GaussianPulseSchedule &,
                           const GaussianPulseSchedule &) = default;
};

/// One value per index drawn uniformly from [lo, hi] when the Hamiltonian is
/// built; constant in time afterwards. Without an explicit seed the run seed
/// is used.
struct RandomUniformSchedule {
    double lo = 0.0;
    double hi = 0.0;
    std::optional<std::uint64_t> seed;
    friend bool operator==(const RandomUniformSchedule &,
                           const RandomUniformSchedule &) = default;
};

using CoefficientSchedule =
    std::variant<ConstantSchedule, PerIndexSchedule, LinearRampSchedule,
                 GaussianPulseSchedule, RandomUniformSchedule>;

/// Text form used by the input file, e.g. `1.5`, `[1, 0.5, 0]` (brackets are
/// optional for lists of two or more), `ramp(0, 2)`,
/// `pulse(1, 0.5, 0.1)`, `random(-3, 3, 7)`.
[[nodiscard]] std::string format_schedule(const CoefficientSchedule &s);

/// Inverse of format_schedule. Returns an error message on failure.
[[nodiscard]] std::variant<CoefficientSchedule, std::string>
parse_schedule(std::string_view text);

[[nodiscard]] bool is_identically_zero(const CoefficientSchedule &s);

/// A single resolved coefficient function of time.
class Coefficient {
  public:
    enum class Kind { Constant, LinearRamp, GaussianPulse };

    Coefficient() = default;
    static Coefficient constant(double value);
    static Coefficient ramp(double start, double end, double duration);
    static Coefficient pulse(double amplitude, double center, double width);

    [[nodiscard]] double at(double t) const noexcept;
    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_time_independent() const noexcept;
    /// True when the function is zero for every t.
    [[nodiscard]] bool is_zero() const noexcept;

    friend bool operator==(const Coefficient &, const Coefficient &) = default;

  private:
    Kind kind_ = Kind::Constant;
    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 0.0;
};

/// Expands a schedule into `count` per-index coefficient functions.
/// `duration` is the ramp length; `fallback_seed` seeds random draws when the
/// schedule carries no seed of its own.
[[nodiscard]] std::vector<Coefficient>
resolve_schedule(const CoefficientSchedule &s, std::size_t count,
                 double duration, std::uint64_t fallback_seed);

/// Uniform draws in [lo, hi] from a seeded 64-bit Mersenne twister. The
/// mapping from generator output to doubles is fixed here so that draws are
/// identical across standard library implementations.
[[nodiscard]] std::vector<double> draw_uniform(double lo, double hi,
                                               std::size_t count,
                                               std::uint64_t seed);

} // namespace qchain
