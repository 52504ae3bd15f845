#pragma once

#include <numbers>

namespace tlcasimir::constants {

/// Reduced Planck constant [J s] (exact since the 2019 SI redefinition of h).
inline constexpr double hbar = 1.054571817e-34;

/// Boltzmann constant [J/K] (exact).
inline constexpr double k_boltzmann = 1.380649e-23;

/// Vacuum speed of light [m/s]. Only used as the CLI default for the line's
/// propagation speed; physics code always takes c from the LineSpec.
inline constexpr double c_vacuum = 299792458.0;

inline constexpr double pi = std::numbers::pi;

} // namespace tlcasimir::constants
