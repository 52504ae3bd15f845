#include "tlcasimir/force.hpp"

#include "tlcasimir/constants.hpp"
#include "tlcasimir/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace tlcasimir {

namespace {

void require_length(double length) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw std::invalid_argument("separation must be finite and positive");
    }
}

struct RotatedIntegrand {
    const ImpedanceExpr& z1;
    const ImpedanceExpr& z2;
    const LineSpec& line;
    double length;
    MirrorFlavor flavor;

    double operator()(double u) const {
        const double xi = u * line.c() / length;
        return rotated_integrand(u, reflection_imaginary(z1, line, xi, flavor),
                                 reflection_imaginary(z2, line, xi, flavor));
    }
};

double load_seen_by_line(const ImpedanceExpr& expr, const LineSpec& line, double xi, MirrorFlavor flavor) {
    const double z = eval_impedance_imaginary(expr, xi);
    if (flavor == MirrorFlavor::Terminating) return z;
    if (std::isinf(z)) return line.z0();
    return z * line.z0() / (z + line.z0());
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

double reference_force(const LineSpec& line, double length) {
    require_length(length);
    return constants::pi * constants::hbar * line.c() / (24.0 * length * length);
}

double rotated_integrand(double u, double r1, double r2) {
    const double rho = r1 * r2;
    if (rho == 0.0) return 0.0;
    // 1 - rho e^{-2u} without cancelling when rho is 1.
    const double denominator = (1.0 - rho) - rho * std::expm1(-2.0 * u);
    if (!(denominator > 0.0)) {
        throw InvariantViolation("non-positive force denominator at u = " + std::to_string(u));
    }
    return u * rho * std::exp(-2.0 * u) / denominator;
}

double rotated_integrand_at_zero(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                 double length, MirrorFlavor flavor) {
    const ReflectionSeries a = reflection_near_zero(z1, line, length, flavor);
    const ReflectionSeries b = reflection_near_zero(z2, line, length, flavor);
    if (a.value * b.value != 1.0) return 0.0;
    const double slope = a.slope * b.value + a.value * b.slope;
    return 1.0 / (2.0 - slope);
}

ForceResult force_zero_temperature(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                   double length, const QuadratureConfig& cfg, MirrorFlavor flavor) {
    require_length(length);
    QuadratureConfig local = cfg;
    local.tail_constant = 1.0 / (-std::expm1(-2.0 * local.min_cutoff));
    const QuadratureResult q = integrate_semi_infinite(RotatedIntegrand{z1, z2, line, length, flavor}, local);

    const double scale = 24.0 / (constants::pi * constants::pi);
    ForceResult out;
    out.reference_force = reference_force(line, length);
    out.f_normalized = scale * q.value;
    out.force_si = constants::hbar * line.c() / (constants::pi * length * length) * q.value;
    out.error_estimate = scale * q.error_estimate;
    out.evaluations = q.evaluations;
    out.subdivisions = q.subdivisions;
    return out;
}

ForceResult force_finite_temperature(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                     double length, const ThermalSpec& th, const QuadratureConfig& cfg,
                                     MirrorFlavor flavor) {
    require_length(length);
    cfg.validate();
    if (th.is_zero()) {
        throw std::invalid_argument("Matsubara summation needs T > 0");
    }
    const double kt = constants::k_boltzmann * th.temperature();
    const double u1 = 2.0 * constants::pi * length * kt / (constants::hbar * line.c());
    if (!(u1 > 0.0) || !std::isfinite(u1)) {
        throw NumericalError("Matsubara spacing out of range");
    }
    const double scale = 24.0 * u1 / (constants::pi * constants::pi);
    const RotatedIntegrand integrand{z1, z2, line, length, flavor};

    // For n >= M, |F(n u1)| <= n u1 q^n / (1 - q) with q = e^{-2 u1}.
    const double q = std::exp(-2.0 * u1);
    const double one_minus_q = -std::expm1(-2.0 * u1);
    auto tail = [&](double m) {
        const double qm = std::pow(q, m);
        return scale * u1 * qm * (m - (m - 1.0) * q) / (one_minus_q * one_minus_q * one_minus_q);
    };

    double sum = 0.5 * rotated_integrand_at_zero(z1, z2, line, length, flavor);
    std::size_t n = 1;
    std::size_t evaluations = 0;
    const std::size_t limit = 100 * cfg.max_subdivisions + 1000;
    double bound = tail(1.0);
    while (bound >= cfg.abs_tol) {
        if (n > limit) {
            throw NumericalError("Matsubara sum did not converge within " + std::to_string(limit) + " terms");
        }
        const double term = integrand(static_cast<double>(n) * u1);
        if (!std::isfinite(term)) {
            throw NumericalError("non-finite Matsubara term");
        }
        sum += term;
        ++evaluations;
        ++n;
        bound = tail(static_cast<double>(n));
    }

    ForceResult out;
    out.reference_force = reference_force(line, length);
    out.f_normalized = scale * sum;
    out.force_si = 2.0 * kt / length * sum;
    out.error_estimate = bound;
    out.evaluations = evaluations;
    out.matsubara_terms = n;
    return out;
}

ForceResult compute_force(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line, double length,
                          const ThermalSpec& th, const QuadratureConfig& cfg, MirrorFlavor flavor) {
    return th.is_zero() ? force_zero_temperature(z1, z2, line, length, cfg, flavor)
                        : force_finite_temperature(z1, z2, line, length, th, cfg, flavor);
}

std::vector<SignSample> sign_profile(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                     double length, const std::vector<double>& u_grid, MirrorFlavor flavor) {
    require_length(length);
    std::vector<SignSample> out;
    out.reserve(u_grid.size());
    for (double u : u_grid) {
        if (!(u > 0.0) || !std::isfinite(u)) {
            throw std::invalid_argument("sign profile grid needs finite u > 0");
        }
        const double xi = u * line.c() / length;
        SignSample s{u, reflection_imaginary(z1, line, xi, flavor), reflection_imaginary(z2, line, xi, flavor), 0,
                     false};
        s.product_sign = sign_of(s.r1) * sign_of(s.r2);
        const double a = load_seen_by_line(z1, line, xi, flavor);
        const double b = load_seen_by_line(z2, line, xi, flavor);
        const double z0 = line.z0();
        s.impedances_straddle_z0 = (a < z0 && z0 < b) || (b < z0 && z0 < a);
        out.push_back(s);
    }
    return out;
}

double mode_sum_oracle(BoundaryPair pair, const LineSpec& line, double length) {
    require_length(length);
    // Abel-Plana: sum_n F(n) - integral F (or the half-integer version) for
    // F(t) = t, leaving an integral over the imaginary axis.
    boost::math::quadrature::exp_sinh<double> rule;
    double sum = 0.0;
    if (pair == BoundaryPair::LikePair) {
        sum = -2.0 * rule.integrate([](double t) { return t / std::expm1(2.0 * constants::pi * t); }, 1e-14);
    } else {
        sum = 2.0 * rule.integrate([](double t) { return t / (std::exp(2.0 * constants::pi * t) + 1.0); }, 1e-14);
    }
    // E(l) = (pi hbar c / 2l) * sum; attraction is +dE/dl.
    return -constants::pi * constants::hbar * line.c() * sum / (2.0 * length * length);
}

} // namespace tlcasimir
