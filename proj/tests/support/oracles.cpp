#include "oracles.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <variant>
#include <vector>

namespace oracle {

using tlcasimir::Complex;

double extended_real_impedance(const tlcasimir::ImpedanceExpr& expr, double xi) {
    const double inf = std::numeric_limits<double>::infinity();
    const auto& node = expr.node();
    if (auto r = std::get_if<tlcasimir::Resistor>(&node)) return r->ohms;
    if (auto l = std::get_if<tlcasimir::Inductor>(&node)) return xi * l->henries;
    if (auto c = std::get_if<tlcasimir::Capacitor>(&node)) return 1.0 / (xi * c->farads);
    if (std::holds_alternative<tlcasimir::Short>(node)) return 0.0;
    if (std::holds_alternative<tlcasimir::Open>(node)) return inf;
    if (auto s = std::get_if<tlcasimir::Series>(&node)) {
        double sum = 0.0;
        for (const auto& child : s->children) sum += extended_real_impedance(child, xi);
        return sum;
    }
    const auto& p = std::get<tlcasimir::Parallel>(node);
    double admittance = 0.0;
    for (const auto& child : p.children) {
        const double z = extended_real_impedance(child, xi);
        if (z == 0.0) return 0.0;
        admittance += 1.0 / z;
    }
    return admittance == 0.0 ? inf : 1.0 / admittance;
}

namespace {

double romberg_panel(const std::function<double(double)>& f, double a, double b, double tol) {
    constexpr int kMaxLevels = 22;
    std::vector<double> prev;
    std::vector<double> row;
    double h = b - a;
    double trapezoid = 0.5 * h * (f(a) + f(b));
    prev.push_back(trapezoid);
    for (int level = 1; level < kMaxLevels; ++level) {
        const long n = 1L << (level - 1);
        double midpoints = 0.0;
        for (long i = 0; i < n; ++i) midpoints += f(a + (static_cast<double>(i) + 0.5) * h);
        trapezoid = 0.5 * (trapezoid + h * midpoints);
        h *= 0.5;
        row.assign(1, trapezoid);
        double factor = 1.0;
        for (std::size_t j = 1; j <= prev.size(); ++j) {
            factor *= 4.0;
            row.push_back(row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0));
        }
        if (level > 4 && std::abs(row.back() - prev.back()) <= tol * std::max(1.0, std::abs(row.back()))) {
            return row.back();
        }
        prev = row;
    }
    return prev.back();
}

} // namespace

double romberg(const std::function<double(double)>& f, double upper, double tol) {
    double total = 0.0;
    // Finer panels near the origin where reflection features sit.
    std::vector<double> edges = {0.0, 1.0 / 64, 1.0 / 16, 0.25, 0.5};
    for (double x = 1.0; x <= upper; x += 1.0) edges.push_back(x);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) total += romberg_panel(f, edges[k], edges[k + 1], tol);
    return total;
}

double normalized_force(const std::function<double(double)>& r1, const std::function<double(double)>& r2) {
    auto integrand = [&](double u) {
        const double g = r1(u) * r2(u) * std::exp(-2.0 * u);
        return u * g / (1.0 - g);
    };
    const double pi = std::numbers::pi;
    return 24.0 / (pi * pi) * romberg(integrand, 40.0);
}

double kirchhoff_residual(Complex noise1, Complex noise2, Complex z1, Complex z2, double z0, double kl,
                          Complex i_plus_0, Complex i_minus_0) {
    const Complex i_plus_l = i_plus_0 * std::polar(1.0, kl);
    const Complex i_minus_l = i_minus_0 * std::polar(1.0, -kl);
    const Complex a1 = i_plus_0 * (1.0 + z0 / z1);
    const Complex b1 = i_minus_0 * (1.0 - z0 / z1);
    const Complex a2 = -i_plus_l * (1.0 - z0 / z2);
    const Complex b2 = -i_minus_l * (1.0 + z0 / z2);
    // each relation against the size of its own terms: with |Z| << Z0 the
    // summands are much larger than the noise current and cancel
    const double s1 = std::max({std::abs(a1) + std::abs(b1), std::abs(noise1), 1e-300});
    const double s2 = std::max({std::abs(a2) + std::abs(b2), std::abs(noise2), 1e-300});
    return std::max(std::abs(a1 + b1 - noise1) / s1, std::abs(a2 + b2 - noise2) / s2);
}

namespace {

// z coth z - 1 and w/(e^w - 1) - 1, both accurate near zero.
Complex zcoth_minus_one(Complex z) {
    if (std::abs(z) < 0.1) {
        const Complex z2 = z * z;
        return z2 * (1.0 / 3.0 + z2 * (-1.0 / 45.0 + z2 * (2.0 / 945.0 - z2 / 4725.0)));
    }
    return z * std::cosh(z) / std::sinh(z) - 1.0;
}

Complex bernoulli_minus_one(Complex w) {
    if (std::abs(w) < 0.1) {
        const Complex w2 = w * w;
        return -w / 2.0 + w2 * (1.0 / 12.0 + w2 * (-1.0 / 720.0 + w2 * (1.0 / 30240.0 - w2 / 1209600.0)));
    }
    return w / (std::exp(w) - 1.0) - 1.0;
}

} // namespace

double perfect_mirror_force_tilted_ray(double t, double theta) {
    const double pi = std::numbers::pi;
    const Complex ray = std::polar(1.0, theta);
    // Integrand -(1/pi) Re[e^{i theta} W G], W = k coth(k/2t), G = 1/(e^{-2ik} - 1).
    // Writing W G = i t phi psi / k, the i t / k pole part is purely
    // imaginary on the ray and drops out of the real part.
    auto integrand = [&](double s) {
        const Complex k = s * ray;
        const Complex phi_m1 = zcoth_minus_one(k / (2.0 * t));
        const Complex psi_m1 = bernoulli_minus_one(Complex(0.0, -2.0) * k);
        const Complex excess = phi_m1 * (1.0 + psi_m1) + psi_m1;
        return -(1.0 / pi) * (Complex(0.0, t) * excess).real() / s;
    };
    const double upper = 30.0 / std::sin(theta);
    boost::math::quadrature::tanh_sinh<double> rule;
    const double integral = rule.integrate(integrand, 0.0, upper, 1e-13);
    // Indentation around the k = 0 pole, F(0+) = 1/2 for perfect mirrors.
    const double indentation = 2.0 * theta * 0.5 * t / pi;
    return integral + indentation;
}

} // namespace oracle
