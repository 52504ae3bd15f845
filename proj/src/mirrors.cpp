#include "tlcasimir/mirrors.hpp"

#include "tlcasimir/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tlcasimir {

namespace {

Complex reflection_from(const Immittance& z, double z0) {
    const Complex denominator = z.num + z0 * z.den;
    if (denominator == 0.0) {
        throw InvariantViolation("Z = -Z0: reflection coefficient undefined");
    }
    return (z.num - z0 * z.den) / denominator;
}

// 1 + r = 2Z/(Z + Z0), without the cancellation at |Z| << Z0
Complex transmission_from(const Immittance& z, double z0) { return 2.0 * z.num / (z.num + z0 * z.den); }

// 1 - |r|^2 = 4 Z0 Re Z / |Z + Z0|^2
double loss_from(const Immittance& z, double z0) {
    return 4.0 * z0 * (z.num * std::conj(z.den)).real() / std::norm(z.num + z0 * z.den);
}

// Z || Z0, projectively.
Immittance loaded_by_line(const Immittance& z, double z0) {
    Immittance out{z.num * z0, z.num + z0 * z.den};
    const double scale = std::max(std::abs(out.num), std::abs(out.den));
    out.num /= scale;
    out.den /= scale;
    return out;
}

} // namespace

double one_minus_r_squared(const Mirror& m) {
    return std::isnan(m.reflection_loss) ? 1.0 - std::norm(m.r) : m.reflection_loss;
}

Mirror reflect_termination(const Immittance& z, double z0, Complex omega) {
    const Complex r = reflection_from(z, z0);
    return {r, transmission_from(z, z0), MirrorFlavor::Terminating, omega, loss_from(z, z0)};
}

Mirror reflect_termination(const ImpedanceExpr& expr, const LineSpec& line, Complex omega) {
    return reflect_termination(eval_impedance(expr, omega), line.z0(), omega);
}

Mirror reflect_embedded(const Immittance& z, double z0, Complex omega) {
    const Immittance seen = loaded_by_line(z, z0);
    const Complex r = reflection_from(seen, z0);
    return {r, transmission_from(seen, z0), MirrorFlavor::Embedded, omega, loss_from(seen, z0)};
}

Mirror reflect_embedded(const ImpedanceExpr& expr, const LineSpec& line, Complex omega) {
    return reflect_embedded(eval_impedance(expr, omega), line.z0(), omega);
}

Mirror reflect(const ImpedanceExpr& expr, const LineSpec& line, Complex omega, MirrorFlavor flavor) {
    return flavor == MirrorFlavor::Terminating ? reflect_termination(expr, line, omega)
                                               : reflect_embedded(expr, line, omega);
}

double reflection_imaginary(const ImpedanceExpr& expr, const LineSpec& line, double xi, MirrorFlavor flavor) {
    const double z = eval_impedance_imaginary(expr, xi);
    const double z0 = line.z0();
    double seen = z;
    if (flavor == MirrorFlavor::Embedded) {
        seen = std::isinf(z) ? z0 : z * z0 / (z + z0);
    }
    if (std::isinf(seen)) {
        return 1.0;
    }
    return (seen - z0) / (seen + z0);
}

ReflectionSeries reflection_near_zero(const ImpedanceExpr& expr, const LineSpec& line, double length,
                                      MirrorFlavor flavor) {
    // z(u) = N(u)/D(u) in units of Z0, with N(0), D(0) not both zero.
    const RationalImpedance z = rational_impedance(expr, line, length);
    const double n0 = z.num_coeff(0);
    const double n1 = z.num_coeff(1);
    const double d0 = z.den_coeff(0);
    const double d1 = z.den_coeff(1);
    if (flavor == MirrorFlavor::Terminating) {
        // r = (N - D)/(N + D)
        const double s = n0 + d0;
        return {(n0 - d0) / s, 2.0 * (n1 * d0 - n0 * d1) / (s * s)};
    }
    // r = -D/(2N + D)
    const double s = 2.0 * n0 + d0;
    return {-d0 / s, 2.0 * (n1 * d0 - n0 * d1) / (s * s)};
}

double energy_identity_residual(const ImpedanceExpr& expr, const LineSpec& line, double omega) {
    const Immittance z = eval_impedance(expr, omega);
    const ParallelRX rx = decompose_parallel_rx(z);
    const Mirror m = reflect_termination(z, line.z0(), omega);
    double transmitted = 0.0;
    if (m.t != 0.0 && !std::isinf(rx.r)) {
        transmitted = line.z0() / rx.r * std::norm(m.t);
    }
    return std::abs(1.0 - std::norm(m.r) - transmitted);
}

} // namespace tlcasimir
