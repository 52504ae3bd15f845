#pragma once

#include "tlcasimir/circuit.hpp"

#include <limits>

namespace tlcasimir {

enum class MirrorFlavor {
    Terminating, ///< Z closes the end of the line: r = (Z - Z0)/(Z + Z0).
    Embedded,    ///< Z sits between two line sections: Z is loaded by Z0 in parallel.
};

/// Frequency-local reflection/transmission pair. For both flavors t = 1 + r.
struct Mirror {
    Complex r;
    Complex t;
    MirrorFlavor flavor;
    Complex omega;
    /// 1 - |r|^2 computed from the load without cancellation; NaN when the
    /// mirror was built from bare coefficients.
    double reflection_loss = std::numeric_limits<double>::quiet_NaN();
};

/// 1 - |r|^2, from reflection_loss when available.
double one_minus_r_squared(const Mirror& m);

Mirror reflect_termination(const Immittance& z, double z0, Complex omega);
Mirror reflect_termination(const ImpedanceExpr& expr, const LineSpec& line, Complex omega);
Mirror reflect_embedded(const Immittance& z, double z0, Complex omega);
Mirror reflect_embedded(const ImpedanceExpr& expr, const LineSpec& line, Complex omega);
Mirror reflect(const ImpedanceExpr& expr, const LineSpec& line, Complex omega, MirrorFlavor flavor);

/// Real reflection coefficient at omega = i xi, xi > 0. Lies in [-1, 1] for
/// passive networks.
double reflection_imaginary(const ImpedanceExpr& expr, const LineSpec& line, double xi, MirrorFlavor flavor);

/// First-order behaviour r(iu) ~ value + slope * u as u -> 0+, where
/// u = xi l / c. Exact: derived from the rational form of Z(iu).
struct ReflectionSeries {
    double value;
    double slope;
};
ReflectionSeries reflection_near_zero(const ImpedanceExpr& expr, const LineSpec& line, double length,
                                      MirrorFlavor flavor);

/// |1 - |r|^2 - (Z0/R)|t|^2| for the terminating mirror at real omega, with R
/// the parallel resistance of Z. The weighted transmission term is zero when
/// R is infinite (lossless load) or t vanishes (short).
double energy_identity_residual(const ImpedanceExpr& expr, const LineSpec& line, double omega);

} // namespace tlcasimir
