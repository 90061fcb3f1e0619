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

#include "qchain/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qchain/error.hpp"
#include "text_util.hpp"

namespace qchain {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::vector<double> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += detail::format_double(values[i]);
    }
    return out;
}

std::optional<std::vector<double>> parse_numbers(std::string_view body) {
    std::vector<double> out;
    for (auto piece : detail::split(body, ',')) {
        auto v = detail::parse_double(piece);
        if (!v || !std::isfinite(*v)) {
            return std::nullopt;
        }
        out.push_back(*v);
    }
    return out;
}

} // namespace

std::string format_schedule(const CoefficientSchedule &s) {
    return std::visit(
        overloaded{
            [](const ConstantSchedule &c) {
                return detail::format_double(c.value);
            },
            [](const PerIndexSchedule &p) { return "[" + join(p.values) + "]"; },
            [](const LinearRampSchedule &r) {
                return "ramp(" + join({r.start, r.end}) + ")";
            },
            [](const GaussianPulseSchedule &g) {
                return "pulse(" + join({g.amplitude, g.center, g.width}) +
                       ")";
            },
            [](const RandomUniformSchedule &r) {
                std::string out = "random(" + join({r.lo, r.hi});
                if (r.seed) {
                    out += ", " + std::to_string(*r.seed);
                }
                return out + ")";
            },
        },
        s);
}

std::variant<CoefficientSchedule, std::string>
parse_schedule(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) {
        return std::string("empty coefficient value");
    }
    if (text.front() == '[') {
        if (text.back() != ']') {
            return "missing ']' in '" + std::string(text) + "'";
        }
        auto values = parse_numbers(text.substr(1, text.size() - 2));
        if (!values) {
            return "invalid number list '" + std::string(text) + "'";
        }
        return CoefficientSchedule{PerIndexSchedule{std::move(*values)}};
    }
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        auto values = parse_numbers(text);
        if (!values) {
            return "invalid number list '" + std::string(text) + "'";
        }
        if (values->size() == 1) {
            return CoefficientSchedule{ConstantSchedule{values->front()}};
        }
        return CoefficientSchedule{PerIndexSchedule{std::move(*values)}};
    }
    if (text.back() != ')') {
        return "missing ')' in '" + std::string(text) + "'";
    }
    const std::string name = detail::lower(detail::trim(text.substr(0, open)));
    const auto body = text.substr(open + 1, text.size() - open - 2);
    const auto args = detail::split(body, ',');

    auto numbers = [&](std::size_t count) -> std::optional<std::vector<double>> {
        if (args.size() != count) {
            return std::nullopt;
        }
        std::vector<double> out;
        for (auto a : args) {
            auto v = detail::parse_double(a);
            if (!v || !std::isfinite(*v)) {
                return std::nullopt;
            }
            out.push_back(*v);
        }
        return out;
    };

    if (name == "ramp") {
        auto v = numbers(2);
        if (!v) {
            return std::string("ramp expects (start, end)");
        }
        return CoefficientSchedule{LinearRampSchedule{(*v)[0], (*v)[1]}};
    }
    if (name == "pulse") {
        auto v = numbers(3);
        if (!v) {
            return std::string("pulse expects (amplitude, center, width)");
        }
        if (!((*v)[2] > 0.0)) {
            return std::string("pulse width must be positive");
        }
        return CoefficientSchedule{
            GaussianPulseSchedule{(*v)[0], (*v)[1], (*v)[2]}};
    }
    if (name == "random") {
        if (args.size() != 2 && args.size() != 3) {
            return std::string("random expects (lo, hi) or (lo, hi, seed)");
        }
        auto lo = detail::parse_double(args[0]);
        auto hi = detail::parse_double(args[1]);
        if (!lo || !hi || !std::isfinite(*lo) || !std::isfinite(*hi)) {
            return std::string("random bounds must be finite numbers");
        }
        if (*lo > *hi) {
            return std::string("random requires lo <= hi");
        }
        RandomUniformSchedule r{*lo, *hi, std::nullopt};
        if (args.size() == 3) {
            auto seed = detail::parse_uint(args[2]);
            if (!seed) {
                return std::string("random seed must be a nonnegative integer");
            }
            r.seed = *seed;
        }
        return CoefficientSchedule{r};
    }
    return "unknown schedule '" + name + "'";
}

bool is_identically_zero(const CoefficientSchedule &s) {
    return std::visit(
        overloaded{
            [](const ConstantSchedule &c) { return c.value == 0.0; },
            [](const PerIndexSchedule &p) {
                return std::all_of(p.values.begin(), p.values.end(),
                                   [](double v) { return v == 0.0; });
            },
            [](const LinearRampSchedule &r) {
                return r.start == 0.0 && r.end == 0.0;
            },
            [](const GaussianPulseSchedule &g) { return g.amplitude == 0.0; },
            [](const RandomUniformSchedule &r) {
                return r.lo == 0.0 && r.hi == 0.0;
            },
        },
        s);
}

Coefficient Coefficient::constant(double value) {
    Coefficient c;
    c.kind_ = Kind::Constant;
    c.a_ = value;
    return c;
}

Coefficient Coefficient::ramp(double start, double end, double duration) {
    Coefficient c;
    c.kind_ = Kind::LinearRamp;
    c.a_ = start;
    c.b_ = end;
    c.c_ = duration;
    return c;
}

Coefficient Coefficient::pulse(double amplitude, double center, double width) {
    Coefficient c;
    c.kind_ = Kind::GaussianPulse;
    c.a_ = amplitude;
    c.b_ = center;
    c.c_ = width;
    return c;
}

double Coefficient::at(double t) const noexcept {
    switch (kind_) {
    case Kind::Constant:
        return a_;
    case Kind::LinearRamp: {
        // Zero-length ramps stay at the start value.
        const double s = c_ > 0.0 ? std::clamp(t / c_, 0.0, 1.0) : 0.0;
        return a_ + (b_ - a_) * s;
    }
    case Kind::GaussianPulse: {
        const double d = (t - b_) / c_;
        return a_ * std::exp(-0.5 * d * d);
    }
    }
    return 0.0;
}

bool Coefficient::is_time_independent() const noexcept {
    switch (kind_) {
    case Kind::Constant:
        return true;
    case Kind::LinearRamp:
        return a_ == b_ || c_ <= 0.0;
    case Kind::GaussianPulse:
        return a_ == 0.0;
    }
    return false;
}

bool Coefficient::is_zero() const noexcept {
    switch (kind_) {
    case Kind::Constant:
        return a_ == 0.0;
    case Kind::LinearRamp:
        return a_ == 0.0 && (b_ == 0.0 || c_ <= 0.0);
    case Kind::GaussianPulse:
        return a_ == 0.0;
    }
    return false;
}

std::vector<double> draw_uniform(double lo, double hi, std::size_t count,
                                 std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<double> out(count);
    for (auto &v : out) {
        const double u =
            static_cast<double>(gen() >> 11) * 0x1.0p-53; // [0, 1)
        v = lo + (hi - lo) * u;
        v = std::clamp(v, lo, hi);
    }
    return out;
}

std::vector<Coefficient> resolve_schedule(const CoefficientSchedule &s,
                                          std::size_t count, double duration,
                                          std::uint64_t fallback_seed) {
    return std::visit(
        overloaded{
            [&](const ConstantSchedule &c) {
                return std::vector<Coefficient>(count,
                                                Coefficient::constant(c.value));
            },
            [&](const PerIndexSchedule &p) {
                if (p.values.size() != count) {
                    throw Error(ErrorKind::ConflictingKeys,
                                "per-index list has " +
                                    std::to_string(p.values.size()) +
                                    " entries, expected " +
                                    std::to_string(count));
                }
                std::vector<Coefficient> out;
                out.reserve(count);
                for (double v : p.values) {
                    out.push_back(Coefficient::constant(v));
                }
                return out;
            },
            [&](const LinearRampSchedule &r) {
                return std::vector<Coefficient>(
                    count, Coefficient::ramp(r.start, r.end, duration));
            },
            [&](const GaussianPulseSchedule &g) {
                return std::vector<Coefficient>(
                    count, Coefficient::pulse(g.amplitude, g.center, g.width));
            },
            [&](const RandomUniformSchedule &r) {
                const auto draws = draw_uniform(r.lo, r.hi, count,
                                                r.seed.value_or(fallback_seed));
                std::vector<Coefficient> out;
                out.reserve(count);
                for (double v : draws) {
                    out.push_back(Coefficient::constant(v));
                }
                return out;
            },
        },
        s);
}

} // namespace qchain
