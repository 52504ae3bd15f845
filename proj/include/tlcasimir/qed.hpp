#pragma once

// Scattering formulation for two mirrors a distance l apart on an infinite
// line. Everything here works with real wavenumbers and exposes integrands
// only; total forces are evaluated on the imaginary axis (force.hpp).

#include "tlcasimir/circuit.hpp"
#include "tlcasimir/mirrors.hpp"
#include "tlcasimir/thermal.hpp"

#include <array>

namespace tlcasimir {

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Cavity amplitudes (V+^C, V-^C) = cavity * (V+, V-), outgoing amplitudes
/// (V+^(2), V-^(1)) = scattering * (V+, V-).
struct ScatterMatrices {
    Matrix2 cavity;
    Matrix2 scattering;

    Complex tau() const { return scattering[0][0]; }
    Complex rho1() const { return scattering[1][0]; }
    Complex rho2() const { return scattering[0][1]; }
};

/// Below this |1 - r1 r2 e^{2ikl}| the cavity is treated as an undamped resonance.
inline constexpr double kResonanceTolerance = 1e-14;
/// Allowed | |r|^2 + |t|^2 - 1 | for a mirror to count as lossless.
inline constexpr double kLosslessTolerance = 1e-10;

/// Throws NumericalError on an undamped resonance.
ScatterMatrices scattering_matrices(const Mirror& m1, const Mirror& m2, double kl);

/// (1/2pi) hbar c k coth(beta hbar c k / 2): energy density per unit k of
/// the free line (both directions, zero-point plus thermal).
double free_density_integrand(double k, const LineSpec& line, const ThermalSpec& th);

/// Energy density per unit k between two lossless mirrors. Throws
/// std::invalid_argument if either mirror is lossy (use the fdt module).
double cavity_density_integrand(double k, const Mirror& m1, const Mirror& m2, double length,
                                const LineSpec& line, const ThermalSpec& th);

/// Real-axis force integrand per unit k, -(1/2pi) W(k) 2 Re[g/(1-g)] with
/// g = r1 r2 e^{2ikl}. Positive values attract.
double force_integrand_real_axis(double k, const Mirror& m1, const Mirror& m2, double length,
                                 const LineSpec& line, const ThermalSpec& th);

} // namespace tlcasimir
