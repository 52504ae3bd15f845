#pragma once

#include <cstddef>
#include <functional>

namespace tlcasimir {

/// Controls for integrals over (0, inf) of integrands bounded by
/// tail_constant * u * e^{-2u} beyond the cutoff.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::size_t max_subdivisions = 2000;
    double tail_constant = 1.0;
    double min_cutoff = 8.0;

    /// Throws std::invalid_argument for non-positive or non-finite settings.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; ///< panel error plus analytic tail bound
    double cutoff = 0.0;         ///< u_max
    double tail_bound = 0.0;     ///< bound on the integral over (u_max, inf)
    std::size_t evaluations = 0;
    std::size_t subdivisions = 0;
};

/// K (2U + 1) e^{-2U} / 4, the integral of K u e^{-2u} over (U, inf).
double exponential_tail_bound(double cutoff, double tail_constant);

/// Smallest cutoff >= min_cutoff (on a 1/16 grid) whose tail bound is below abs_tol/10.
double choose_cutoff(const QuadratureConfig& cfg);

/// Globally adaptive 15-point Gauss-Kronrod on (0, u_max], with geometric
/// initial panels crowding toward u = 0. Throws NumericalError when the
/// subdivision budget runs out or the integrand returns a non-finite value.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& integrand,
                                         const QuadratureConfig& cfg = {});

} // namespace tlcasimir
