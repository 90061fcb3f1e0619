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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qchain/hamiltonian.hpp"
#include "qchain/pauli.hpp"

namespace qchain {

/// N = sum_i (i-1) (1 - Z_i) / 2 over sites i = 1..n, as a constant term plus
/// one Z term per site beyond the first.
[[nodiscard]] std::vector<PauliTerm>
excitation_displacement_observable(std::size_t n);

/// H(t) itself.
[[nodiscard]] std::vector<PauliTerm>
energy_observable(const HeisenbergHamiltonian &h, double t);

/// (1/n) sum_i A_i.
[[nodiscard]] std::vector<PauliTerm> magnetization_observable(std::size_t n,
                                                              Axis axis);

struct SeriesPoint {
    double axis = 0.0;
    double value = 0.0;
    std::optional<double> sigma;     // shot-noise standard error
    std::optional<double> reference; // exact reference value, if computed

    friend bool operator==(const SeriesPoint &, const SeriesPoint &) = default;
};

struct SeriesMetadata {
    std::string observable;
    std::string config_hash;
    std::uint64_t seed = 0;

    friend bool operator==(const SeriesMetadata &,
                           const SeriesMetadata &) = default;
};

/// Observable values over real time ("t") or imaginary time ("beta").
class ResultSeries {
  public:
    ResultSeries() = default;
    ResultSeries(std::string axis_label, SeriesMetadata metadata);

    /// Throws InvalidArgument unless p.axis exceeds the previous axis value.
    void push(const SeriesPoint &p);

    [[nodiscard]] const std::string &axis_label() const noexcept { return axis_; }
    [[nodiscard]] const SeriesMetadata &metadata() const noexcept { return meta_; }
    [[nodiscard]] const std::vector<SeriesPoint> &points() const noexcept {
        return points_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] bool has_reference() const noexcept;

    friend bool operator==(const ResultSeries &, const ResultSeries &) = default;

  private:
    std::string axis_ = "t";
    SeriesMetadata meta_;
    std::vector<SeriesPoint> points_;
};

/// Header `axis,observable,sigma` (plus `,reference` when any point carries
/// one), then one row per point with 17 significant digits. Absent optional
/// values are empty fields.
[[nodiscard]] std::string format_csv(const ResultSeries &series);
void write_csv(const ResultSeries &series, const std::filesystem::path &path);

/// Reads the format written by write_csv. Axis label and metadata are not
/// stored in the CSV and come back default-initialized.
[[nodiscard]] ResultSeries parse_csv(const std::string &text);
[[nodiscard]] ResultSeries read_csv(const std::filesystem::path &path);

/// Standalone SVG line plot; identical input gives identical bytes. Throws
/// InvalidArgument for an empty series.
[[nodiscard]] std::string render_svg(const ResultSeries &series);
void write_plot(const ResultSeries &series, const std::filesystem::path &path);

/// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace qchain
