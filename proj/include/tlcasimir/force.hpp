#pragma once

// Casimir force between two impedances terminating a line of length l.
// Positive force attracts. Reported in units of f0 = pi hbar c / (24 l^2),
// the force between two perfect 1d mirrors at T = 0.

#include "tlcasimir/circuit.hpp"
#include "tlcasimir/mirrors.hpp"
#include "tlcasimir/quadrature.hpp"
#include "tlcasimir/thermal.hpp"

#include <cstddef>
#include <vector>

namespace tlcasimir {

struct ForceResult {
    double force_si = 0.0;       ///< newtons
    double f_normalized = 0.0;   ///< f / f0
    double error_estimate = 0.0; ///< in units of f0
    double reference_force = 0.0; ///< f0 [N]
    std::size_t evaluations = 0;
    std::size_t subdivisions = 0;
    std::size_t matsubara_terms = 0; ///< 0 for the T = 0 integral
};

/// pi hbar c / (24 l^2).
double reference_force(const LineSpec& line, double length);

/// F(u) = u rho e^{-2u} / (1 - rho e^{-2u}) with rho = r1(iu) r2(iu), the
/// Wick-rotated integrand. Throws InvariantViolation if the denominator is
/// not positive.
double rotated_integrand(double u, double r1, double r2);

/// F(0+) from the exact low-frequency behaviour of both reflections: zero
/// unless r1(0) r2(0) = 1, in which case 1 / (2 - d(r1 r2)/du at 0).
double rotated_integrand_at_zero(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                 double length, MirrorFlavor flavor = MirrorFlavor::Terminating);

/// f = (hbar c / (pi l^2)) * integral_0^inf F(u) du.
ForceResult force_zero_temperature(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                   double length, const QuadratureConfig& cfg = {},
                                   MirrorFlavor flavor = MirrorFlavor::Terminating);

/// f = (2 k_B T / l) * sum'_{n >= 0} F(n u1), u1 = 2 pi l k_B T / (hbar c);
/// the n = 0 term carries weight 1/2. Terms are added until the tail bound
/// drops below cfg.abs_tol (in units of f0). Requires T > 0.
ForceResult force_finite_temperature(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                     double length, const ThermalSpec& th, const QuadratureConfig& cfg = {},
                                     MirrorFlavor flavor = MirrorFlavor::Terminating);

/// Dispatches on th.is_zero().
ForceResult compute_force(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line, double length,
                          const ThermalSpec& th, const QuadratureConfig& cfg = {},
                          MirrorFlavor flavor = MirrorFlavor::Terminating);

struct SignSample {
    double u;
    double r1;
    double r2;
    int product_sign; ///< -1, 0 or +1
    /// Z1(iu) < Z0 < Z2(iu) or the swapped order, using the load each end
    /// presents to the line (Z || Z0 for embedded mirrors).
    bool impedances_straddle_z0;
};

std::vector<SignSample> sign_profile(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                     double length, const std::vector<double>& u_grid,
                                     MirrorFlavor flavor = MirrorFlavor::Terminating);

enum class BoundaryPair {
    LikePair,   ///< modes k_n = n pi / l
    UnlikePair, ///< modes k_n = (n + 1/2) pi / l
};

/// Regularised zero-point mode sum evaluated through the Abel-Plana formula
/// (numerical integral, not a tabulated zeta value). Returns newtons.
double mode_sum_oracle(BoundaryPair pair, const LineSpec& line, double length);

} // namespace tlcasimir
