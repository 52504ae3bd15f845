#include "tlcasimir/circuit.hpp"

#include "tlcasimir/errors.hpp"
#include "overloaded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tlcasimir {

using detail::Overloaded;

namespace {

void require_finite_nonnegative(double value, const char* what) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and nonnegative");
    }
}

void require_arity(const std::vector<ImpedanceExpr>& children, const char* what) {
    if (children.size() < 2) {
        throw std::invalid_argument(std::string(what) + " needs at least two operands");
    }
}

bool children_equal(const std::vector<ImpedanceExpr>& a, const std::vector<ImpedanceExpr>& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

Immittance normalized(Immittance z) {
    const double scale = std::max(std::abs(z.num), std::abs(z.den));
    if (scale > 0.0 && std::isfinite(scale)) {
        z.num /= scale;
        z.den /= scale;
    }
    return z;
}

} // namespace

ImpedanceExpr ImpedanceExpr::resistor(double ohms) {
    require_finite_nonnegative(ohms, "resistance");
    return ImpedanceExpr(Resistor{ohms});
}

ImpedanceExpr ImpedanceExpr::inductor(double henries) {
    require_finite_nonnegative(henries, "inductance");
    return ImpedanceExpr(Inductor{henries});
}

ImpedanceExpr ImpedanceExpr::capacitor(double farads) {
    require_finite_nonnegative(farads, "capacitance");
    if (farads == 0.0) {
        throw std::invalid_argument("capacitance must be strictly positive (use 'open')");
    }
    return ImpedanceExpr(Capacitor{farads});
}

ImpedanceExpr ImpedanceExpr::short_circuit() { return ImpedanceExpr(Short{}); }

ImpedanceExpr ImpedanceExpr::open_circuit() { return ImpedanceExpr(Open{}); }

ImpedanceExpr ImpedanceExpr::series(std::vector<ImpedanceExpr> children) {
    require_arity(children, "series");
    return ImpedanceExpr(Series{std::move(children)});
}

ImpedanceExpr ImpedanceExpr::parallel(std::vector<ImpedanceExpr> children) {
    require_arity(children, "parallel");
    return ImpedanceExpr(Parallel{std::move(children)});
}

bool operator==(const ImpedanceExpr& a, const ImpedanceExpr& b) {
    if (a.node_.index() != b.node_.index()) {
        return false;
    }
    return std::visit(
        Overloaded{
            [&](const Resistor& x) { return x.ohms == std::get<Resistor>(b.node_).ohms; },
            [&](const Inductor& x) { return x.henries == std::get<Inductor>(b.node_).henries; },
            [&](const Capacitor& x) { return x.farads == std::get<Capacitor>(b.node_).farads; },
            [](const Short&) { return true; },
            [](const Open&) { return true; },
            [&](const Series& x) { return children_equal(x.children, std::get<Series>(b.node_).children); },
            [&](const Parallel& x) { return children_equal(x.children, std::get<Parallel>(b.node_).children); },
        },
        a.node_);
}

ElementCounts count_elements(const ImpedanceExpr& expr) {
    ElementCounts counts;
    auto accumulate = [&counts](const std::vector<ImpedanceExpr>& children) {
        for (const auto& child : children) {
            const auto sub = count_elements(child);
            counts.resistors += sub.resistors;
            counts.inductors += sub.inductors;
            counts.capacitors += sub.capacitors;
        }
    };
    std::visit(Overloaded{
                   [&](const Resistor&) { ++counts.resistors; },
                   [&](const Inductor&) { ++counts.inductors; },
                   [&](const Capacitor&) { ++counts.capacitors; },
                   [](const Short&) {},
                   [](const Open&) {},
                   [&](const Series& s) { accumulate(s.children); },
                   [&](const Parallel& p) { accumulate(p.children); },
               },
               expr.node());
    return counts;
}

ImpedanceExpr with_element_values(const ImpedanceExpr& expr, const ElementOverrides& overrides) {
    auto rewrite_all = [&](const std::vector<ImpedanceExpr>& children) {
        std::vector<ImpedanceExpr> out;
        out.reserve(children.size());
        for (const auto& child : children) {
            out.push_back(with_element_values(child, overrides));
        }
        return out;
    };
    return std::visit(
        Overloaded{
            [&](const Resistor& r) { return ImpedanceExpr::resistor(overrides.ohms.value_or(r.ohms)); },
            [&](const Inductor& l) { return ImpedanceExpr::inductor(overrides.henries.value_or(l.henries)); },
            [&](const Capacitor& c) { return ImpedanceExpr::capacitor(overrides.farads.value_or(c.farads)); },
            [&](const Short&) { return expr; },
            [&](const Open&) { return expr; },
            [&](const Series& s) { return ImpedanceExpr::series(rewrite_all(s.children)); },
            [&](const Parallel& p) { return ImpedanceExpr::parallel(rewrite_all(p.children)); },
        },
        expr.node());
}

Complex Immittance::value() const {
    if (is_open()) {
        return {kInfinity, 0.0};
    }
    return num / den;
}

Immittance combine_series(const Immittance& a, const Immittance& b) {
    if (a.is_open() || b.is_open()) {
        return Immittance::open();
    }
    return normalized({a.num * b.den + b.num * a.den, a.den * b.den});
}

Immittance combine_parallel(const Immittance& a, const Immittance& b) {
    if (a.is_short() || b.is_short()) {
        return Immittance::short_circuit();
    }
    return normalized({a.num * b.num, a.den * b.num + b.den * a.num});
}

namespace {

Immittance eval_node(const ImpedanceExpr& expr, Complex omega) {
    constexpr Complex i{0.0, 1.0};
    auto fold = [&](const std::vector<ImpedanceExpr>& children, auto combine) {
        Immittance acc = eval_node(children.front(), omega);
        for (std::size_t k = 1; k < children.size(); ++k) {
            acc = combine(acc, eval_node(children[k], omega));
        }
        return acc;
    };
    return std::visit(
        Overloaded{
            [](const Resistor& r) { return Immittance{r.ohms, 1.0}; },
            [&](const Inductor& l) { return Immittance{-i * omega * l.henries, 1.0}; },
            [&](const Capacitor& c) { return normalized({i, omega * c.farads}); },
            [](const Short&) { return Immittance::short_circuit(); },
            [](const Open&) { return Immittance::open(); },
            [&](const Series& s) { return fold(s.children, combine_series); },
            [&](const Parallel& p) { return fold(p.children, combine_parallel); },
        },
        expr.node());
}

} // namespace

Immittance eval_impedance(const ImpedanceExpr& expr, Complex omega) {
    if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag())) {
        throw std::invalid_argument("angular frequency must be finite");
    }
    return eval_node(expr, omega);
}

double eval_impedance_imaginary(const ImpedanceExpr& expr, double xi) {
    if (!(xi > 0.0) || !std::isfinite(xi)) {
        throw std::invalid_argument("imaginary frequency must be finite and positive");
    }
    const Immittance z = eval_impedance(expr, Complex{0.0, xi});
    if (z.is_open()) {
        return kInfinity;
    }
    const Complex value = z.num / z.den;
    if (std::abs(value.imag()) > kRealAxisTolerance * std::abs(value)) {
        throw InvariantViolation("impedance on the imaginary frequency axis is not real");
    }
    return std::max(0.0, value.real());
}

ParallelRX decompose_parallel_rx(Complex z) {
    double re = z.real();
    const double im = z.imag();
    const double mag2 = std::norm(z);
    if (re < 0.0) {
        if (-re > kRealAxisTolerance * std::sqrt(mag2)) {
            throw std::invalid_argument("impedance with negative real part is not passive");
        }
        re = 0.0;
    }
    if (mag2 == 0.0) {
        return {0.0, 0.0};
    }
    if (re == 0.0) {
        return {kInfinity, im};
    }
    if (im == 0.0) {
        return {re, kInfinity};
    }
    return {mag2 / re, mag2 / im};
}

ParallelRX decompose_parallel_rx(const Immittance& z) {
    if (z.is_open()) {
        return {kInfinity, kInfinity};
    }
    return decompose_parallel_rx(z.num / z.den);
}

Complex recompose_parallel_rx(const ParallelRX& rx) {
    const bool r_inf = std::isinf(rx.r);
    const bool x_inf = std::isinf(rx.x);
    if (r_inf && x_inf) {
        return {kInfinity, 0.0};
    }
    if (r_inf) {
        return {0.0, rx.x};
    }
    if (x_inf) {
        return {rx.r, 0.0};
    }
    if (rx.r == 0.0 || rx.x == 0.0) {
        return {0.0, 0.0};
    }
    const Complex ix{0.0, rx.x};
    return ix * rx.r / (rx.r + ix);
}

LineSpec::LineSpec(double z0_ohms, double speed_m_per_s) : z0_(z0_ohms), c_(speed_m_per_s) {
    if (!std::isfinite(z0_) || !(z0_ > 0.0)) {
        throw std::invalid_argument("line impedance must be finite and positive");
    }
    if (!std::isfinite(c_) || !(c_ > 0.0)) {
        throw std::invalid_argument("propagation speed must be finite and positive");
    }
}

LineSpec LineSpec::from_per_unit_length(double inductance_h_per_m, double capacitance_f_per_m) {
    if (!(inductance_h_per_m > 0.0) || !(capacitance_f_per_m > 0.0)) {
        throw std::invalid_argument("per-unit-length L' and C' must be positive");
    }
    return {std::sqrt(inductance_h_per_m / capacitance_f_per_m),
            1.0 / std::sqrt(inductance_h_per_m * capacitance_f_per_m)};
}

namespace {

using Poly = std::vector<double>;

bool is_zero(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](double c) { return c == 0.0; });
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::size_t valuation(const Poly& p) {
    std::size_t v = 0;
    while (v < p.size() && p[v] == 0.0) ++v;
    return v;
}

RationalImpedance rational_open() { return {{1.0}, {}}; }
RationalImpedance rational_short() { return {{}, {1.0}}; }

// Cancels common powers of u, drops trailing zeros and rescales so the largest
// coefficient is 1. Coefficients are nonnegative, so zeros here are exact.
RationalImpedance canonical(RationalImpedance z) {
    if (is_zero(z.den)) return rational_open();
    if (is_zero(z.num)) return rational_short();
    const std::size_t shift = std::min(valuation(z.num), valuation(z.den));
    z.num.erase(z.num.begin(), z.num.begin() + static_cast<std::ptrdiff_t>(shift));
    z.den.erase(z.den.begin(), z.den.begin() + static_cast<std::ptrdiff_t>(shift));
    while (!z.num.empty() && z.num.back() == 0.0) z.num.pop_back();
    while (!z.den.empty() && z.den.back() == 0.0) z.den.pop_back();
    double scale = 0.0;
    for (double c : z.num) scale = std::max(scale, c);
    for (double c : z.den) scale = std::max(scale, c);
    for (double& c : z.num) c /= scale;
    for (double& c : z.den) c /= scale;
    return z;
}

RationalImpedance rational_node(const ImpedanceExpr& expr, double z0, double time_of_flight) {
    auto fold = [&](const std::vector<ImpedanceExpr>& children, bool series) {
        RationalImpedance acc = rational_node(children.front(), z0, time_of_flight);
        for (std::size_t k = 1; k < children.size(); ++k) {
            const RationalImpedance b = rational_node(children[k], z0, time_of_flight);
            if (series) {
                if (is_zero(acc.den) || is_zero(b.den)) {
                    acc = rational_open();
                } else {
                    acc = canonical({add(multiply(acc.num, b.den), multiply(b.num, acc.den)), multiply(acc.den, b.den)});
                }
            } else {
                if (is_zero(acc.num) || is_zero(b.num)) {
                    acc = rational_short();
                } else {
                    acc = canonical({multiply(acc.num, b.num), add(multiply(acc.den, b.num), multiply(b.den, acc.num))});
                }
            }
        }
        return acc;
    };
    // xi = u / time_of_flight with time_of_flight = l / c.
    return std::visit(
        Overloaded{
            [&](const Resistor& r) { return canonical({{r.ohms / z0}, {1.0}}); },
            [&](const Inductor& l) { return canonical({{0.0, l.henries / (time_of_flight * z0)}, {1.0}}); },
            [&](const Capacitor& c) { return canonical({{time_of_flight / (c.farads * z0)}, {0.0, 1.0}}); },
            [](const Short&) { return rational_short(); },
            [](const Open&) { return rational_open(); },
            [&](const Series& s) { return fold(s.children, true); },
            [&](const Parallel& p) { return fold(p.children, false); },
        },
        expr.node());
}

} // namespace

RationalImpedance rational_impedance(const ImpedanceExpr& expr, const LineSpec& line, double length) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw std::invalid_argument("separation must be finite and positive");
    }
    return rational_node(expr, line.z0(), length / line.c());
}

} // namespace tlcasimir
