#pragma once

namespace tlcasimir {

/// Thermal state of the line and of all resistive elements. T = 0 is the
/// vacuum (beta = infinity).
class ThermalSpec {
public:
    ThermalSpec() = default;
    explicit ThermalSpec(double kelvin);

    double temperature() const noexcept { return kelvin_; }
    bool is_zero() const noexcept { return kelvin_ == 0.0; }
    /// 1/(k_B T) [1/J]; +inf at T = 0.
    double beta() const noexcept;

    /// hbar*omega / (1 - exp(-beta hbar omega)) [J]. Equals hbar*omega for
    /// omega > 0 and 0 for omega <= 0 at T = 0; tends to k_B T at omega -> 0
    /// for T > 0. Nonnegative on both branches.
    double bose_weighted_energy(double omega) const;

    /// hbar*omega / tanh(beta hbar omega / 2) [J] for omega >= 0: hbar*omega at
    /// T = 0, 2 k_B T in the classical limit.
    double symmetrized_energy(double omega) const;

private:
    double kelvin_ = 0.0;
};

} // namespace tlcasimir
