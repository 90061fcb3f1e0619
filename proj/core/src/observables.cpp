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

#include "qchain/observables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qchain/error.hpp"
#include "text_util.hpp"

namespace qchain {

std::vector<PauliTerm> excitation_displacement_observable(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    }
    std::vector<PauliTerm> terms;
    double offset = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        offset += static_cast<double>(i) / 2.0;
    }
    terms.push_back({offset, {}});
    for (std::size_t i = 1; i < n; ++i) {
        terms.push_back({-static_cast<double>(i) / 2.0, {{i, Axis::Z}}});
    }
    return terms;
}

std::vector<PauliTerm> energy_observable(const HeisenbergHamiltonian &h,
                                         double t) {
    return h.snapshot(t);
}

std::vector<PauliTerm> magnetization_observable(std::size_t n, Axis axis) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    }
    std::vector<PauliTerm> terms;
    for (std::size_t i = 0; i < n; ++i) {
        terms.push_back({1.0 / static_cast<double>(n), {{i, axis}}});
    }
    return terms;
}

ResultSeries::ResultSeries(std::string axis_label, SeriesMetadata metadata)
    : axis_(std::move(axis_label)), meta_(std::move(metadata)) {}

void ResultSeries::push(const SeriesPoint &p) {
    if (!std::isfinite(p.axis)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite axis value");
    }
    if (!points_.empty() && !(p.axis > points_.back().axis)) {
        throw Error(ErrorKind::InvalidArgument,
                    "axis values must be strictly increasing");
    }
    points_.push_back(p);
}

bool ResultSeries::has_reference() const noexcept {
    return std::any_of(points_.begin(), points_.end(),
                       [](const SeriesPoint &p) { return p.reference.has_value(); });
}

std::string format_csv(const ResultSeries &series) {
    const bool ref = series.has_reference();
    std::string out = ref ? "axis,observable,sigma,reference\n"
                          : "axis,observable,sigma\n";
    for (const auto &p : series.points()) {
        out += detail::format_double(p.axis);
        out += ',';
        out += detail::format_double(p.value);
        out += ',';
        if (p.sigma) {
            out += detail::format_double(*p.sigma);
        }
        if (ref) {
            out += ',';
            if (p.reference) {
                out += detail::format_double(*p.reference);
            }
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw Error(ErrorKind::IoError, "cannot create directory " +
                                                path.parent_path().string() +
                                                ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    out << text;
    out.flush();
    if (!out) {
        throw Error(ErrorKind::IoError, "write failed for " + path.string());
    }
}

void write_csv(const ResultSeries &series, const std::filesystem::path &path) {
    write_text_file(path, format_csv(series));
}

ResultSeries parse_csv(const std::string &text) {
    const auto rows = detail::lines(text);
    if (rows.empty()) {
        throw ParseError(ErrorKind::SyntaxError, 1, "missing CSV header");
    }
    bool ref = false;
    if (rows[0] == "axis,observable,sigma,reference") {
        ref = true;
    } else if (rows[0] != "axis,observable,sigma") {
        throw ParseError(ErrorKind::SyntaxError, 1, "unexpected CSV header");
    }
    ResultSeries series;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].empty()) {
            continue;
        }
        const auto fields = detail::split(rows[i], ',');
        if (fields.size() != (ref ? 4U : 3U)) {
            throw ParseError(ErrorKind::SyntaxError, i + 1,
                             "wrong number of CSV fields");
        }
        auto number = [&](std::string_view f) {
            auto v = detail::parse_double(f);
            if (!v) {
                throw ParseError(ErrorKind::SyntaxError, i + 1,
                                 "invalid number '" + std::string(f) + "'");
            }
            return *v;
        };
        SeriesPoint p;
        p.axis = number(fields[0]);
        p.value = number(fields[1]);
        if (!fields[2].empty()) {
            p.sigma = number(fields[2]);
        }
        if (ref && !fields[3].empty()) {
            p.reference = number(fields[3]);
        }
        series.push(p);
    }
    return series;
}

ResultSeries read_csv(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

namespace {

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        case '\'':
            out += "&apos;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

struct Range {
    double lo;
    double hi;
};

Range padded(double lo, double hi) {
    if (hi - lo < 1e-12) {
        return {lo - 0.5, hi + 0.5};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

} // namespace

std::string render_svg(const ResultSeries &series) {
    if (series.empty()) {
        throw Error(ErrorKind::InvalidArgument, "cannot plot an empty series");
    }
    constexpr double width = 640.0;
    constexpr double height = 400.0;
    constexpr double left = 80.0;
    constexpr double right = 20.0;
    constexpr double top = 40.0;
    constexpr double bottom = 60.0;
    constexpr int ticks = 5;

    const auto &pts = series.points();
    double xlo = pts.front().axis;
    double xhi = pts.back().axis;
    double ylo = pts.front().value;
    double yhi = pts.front().value;
    for (const auto &p : pts) {
        const double s = p.sigma.value_or(0.0);
        ylo = std::min(ylo, p.value - s);
        yhi = std::max(yhi, p.value + s);
        if (p.reference) {
            ylo = std::min(ylo, *p.reference);
            yhi = std::max(yhi, *p.reference);
        }
    }
    const Range xr = padded(xlo, xhi);
    const Range yr = padded(ylo, yhi);
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double y) {
        return top + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph;
    };

    const std::string title = series.metadata().observable.empty()
                                  ? std::string("observable")
                                  : series.metadata().observable;

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt("%.0f", width)
      << "\" height=\"" << fmt("%.0f", height) << "\" viewBox=\"0 0 "
      << fmt("%.0f", width) << " " << fmt("%.0f", height) << "\">\n";
    o << "  <rect x=\"0\" y=\"0\" width=\"" << fmt("%.0f", width)
      << "\" height=\"" << fmt("%.0f", height) << "\" fill=\"white\"/>\n";
    o << "  <text x=\"" << fmt("%.2f", left + pw / 2.0)
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << xml_escape(title) << "</text>\n";

    // Frame and ticks.
    o << "  <g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    o << "    <rect x=\"" << fmt("%.2f", left) << "\" y=\"" << fmt("%.2f", top)
      << "\" width=\"" << fmt("%.2f", pw) << "\" height=\"" << fmt("%.2f", ph)
      << "\"/>\n";
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / ticks;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / ticks;
        o << "    <line x1=\"" << fmt("%.2f", sx(fx)) << "\" y1=\""
          << fmt("%.2f", top + ph) << "\" x2=\"" << fmt("%.2f", sx(fx))
          << "\" y2=\"" << fmt("%.2f", top + ph + 5.0) << "\"/>\n";
        o << "    <line x1=\"" << fmt("%.2f", left - 5.0) << "\" y1=\""
          << fmt("%.2f", sy(fy)) << "\" x2=\"" << fmt("%.2f", left)
          << "\" y2=\"" << fmt("%.2f", sy(fy)) << "\"/>\n";
    }
    o << "  </g>\n";
    o << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / ticks;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / ticks;
        o << "    <text x=\"" << fmt("%.2f", sx(fx)) << "\" y=\""
          << fmt("%.2f", top + ph + 18.0) << "\" text-anchor=\"middle\">"
          << fmt("%.3g", fx) << "</text>\n";
        o << "    <text x=\"" << fmt("%.2f", left - 8.0) << "\" y=\""
          << fmt("%.2f", sy(fy) + 4.0) << "\" text-anchor=\"end\">"
          << fmt("%.3g", fy) << "</text>\n";
    }
    o << "    <text x=\"" << fmt("%.2f", left + pw / 2.0) << "\" y=\""
      << fmt("%.2f", height - 16.0) << "\" text-anchor=\"middle\">"
      << xml_escape(series.axis_label()) << "</text>\n";
    o << "  </g>\n";

    if (series.has_reference()) {
        o << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
             "stroke-dasharray=\"6,4\" points=\"";
        bool first = true;
        for (const auto &p : pts) {
            if (!p.reference) {
                continue;
            }
            o << (first ? "" : " ") << fmt("%.2f", sx(p.axis)) << ","
              << fmt("%.2f", sy(*p.reference));
            first = false;
        }
        o << "\"/>\n";
    }

    o << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
         "points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        o << (i == 0 ? "" : " ") << fmt("%.2f", sx(pts[i].axis)) << ","
          << fmt("%.2f", sy(pts[i].value));
    }
    o << "\"/>\n";

    o << "  <g fill=\"#1f77b4\" stroke=\"#1f77b4\">\n";
    for (const auto &p : pts) {
        if (p.sigma && *p.sigma > 0.0) {
            o << "    <line x1=\"" << fmt("%.2f", sx(p.axis)) << "\" y1=\""
              << fmt("%.2f", sy(p.value - *p.sigma)) << "\" x2=\""
              << fmt("%.2f", sx(p.axis)) << "\" y2=\""
              << fmt("%.2f", sy(p.value + *p.sigma)) << "\"/>\n";
        }
        o << "    <circle cx=\"" << fmt("%.2f", sx(p.axis)) << "\" cy=\""
          << fmt("%.2f", sy(p.value)) << "\" r=\"3\"/>\n";
    }
    o << "  </g>\n";
    o << "</svg>\n";
    return o.str();
}

void write_plot(const ResultSeries &series, const std::filesystem::path &path) {
    write_text_file(path, render_svg(series));
}

} // namespace qchain
