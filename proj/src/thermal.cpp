#include "tlcasimir/thermal.hpp"

#include "tlcasimir/constants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tlcasimir {

ThermalSpec::ThermalSpec(double kelvin) : kelvin_(kelvin) {
    if (!std::isfinite(kelvin) || kelvin < 0.0) {
        throw std::invalid_argument("temperature must be finite and nonnegative");
    }
}

double ThermalSpec::beta() const noexcept {
    if (is_zero()) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / (constants::k_boltzmann * kelvin_);
}

double ThermalSpec::bose_weighted_energy(double omega) const {
    const double energy = constants::hbar * omega;
    if (is_zero()) {
        return omega > 0.0 ? energy : 0.0;
    }
    const double kt = constants::k_boltzmann * kelvin_;
    const double x = energy / kt;
    if (x == 0.0) {
        return kt;
    }
    // x / (1 - e^{-x}), accurate for small |x|.
    return kt * (x / -std::expm1(-x));
}

double ThermalSpec::symmetrized_energy(double omega) const {
    const double energy = constants::hbar * omega;
    if (is_zero()) {
        return energy;
    }
    const double kt = constants::k_boltzmann * kelvin_;
    const double x = energy / kt;
    if (x == 0.0) {
        return 2.0 * kt;
    }
    return energy / std::tanh(0.5 * x);
}

} // namespace tlcasimir
