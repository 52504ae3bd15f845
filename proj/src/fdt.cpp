#include "tlcasimir/fdt.hpp"

#include "tlcasimir/constants.hpp"
#include "tlcasimir/errors.hpp"
#include "tlcasimir/qed.hpp"

#include <cmath>
#include <stdexcept>

namespace tlcasimir {

namespace {

double source_spectrum(double resistance, double omega, const ThermalSpec& th) {
    // R = 0 is shunted by the short and R = inf carries no source.
    if (resistance == 0.0 || std::isinf(resistance)) {
        return 0.0;
    }
    return nyquist_current_spectrum(resistance, omega, th).value;
}

} // namespace

NoiseSpectrum nyquist_current_spectrum(double resistance, double omega, const ThermalSpec& th) {
    if (!(resistance > 0.0) || !std::isfinite(resistance)) {
        throw std::invalid_argument("noise resistance must be finite and positive");
    }
    return {omega, 2.0 * th.bose_weighted_energy(omega) * (1.0 / resistance)};
}

ChargeCurrentSpectra charge_and_current_spectrum(const ImpedanceExpr& expr, double omega, const ThermalSpec& th) {
    const Immittance z = eval_impedance(expr, omega);
    if (z.is_open() || z.is_short()) {
        return {0.0, 0.0};
    }
    const Complex admittance = z.den / z.num;
    double conductance = admittance.real();
    if (conductance < 0.0) {
        if (-conductance > kRealAxisTolerance * std::abs(admittance)) {
            throw std::invalid_argument("impedance with negative real part is not passive");
        }
        conductance = 0.0;
    }
    const double current = 2.0 * th.bose_weighted_energy(omega) * conductance;
    double charge = 0.0;
    if (current != 0.0) {
        charge = omega != 0.0 ? current / (omega * omega) : kInfinity;
    }
    return {charge, current};
}

NoiseSpectrum input_spectrum_resistor(double resistance, const LineSpec& line, double omega, const ThermalSpec& th) {
    if (std::isnan(resistance) || resistance < 0.0) {
        throw std::invalid_argument("resistance must be nonnegative");
    }
    if (std::isinf(resistance)) {
        return {omega, 0.0};
    }
    const double z0 = line.z0();
    const double divider = z0 / (resistance + z0);
    return {omega, resistance * divider * divider * 2.0 * th.bose_weighted_energy(omega)};
}

NoiseSpectrum input_spectrum_line(double resistance, const LineSpec& line, double omega, const ThermalSpec& th) {
    if (std::isnan(resistance) || resistance < 0.0) {
        throw std::invalid_argument("resistance must be nonnegative");
    }
    if (resistance == 0.0 || std::isinf(resistance)) {
        return {omega, 0.0};
    }
    // Free forward-travelling waves on a line of impedance R with the same c.
    const LineSpec source_line(resistance, line.c());
    const double free_forward = th.bose_weighted_energy(omega) / (2.0 * source_line.capacitance_per_length() * line.c());
    // Transmission into Z0: the Z0 line terminates the R line.
    const Mirror junction = reflect_termination(Immittance{line.z0(), 1.0}, resistance, omega);
    return {omega, std::norm(junction.t) * free_forward};
}

CavityWaveAmplitudes cavity_wave_currents(Complex noise1, Complex noise2, const Mirror& m1, const Mirror& m2,
                                          double kl) {
    const Complex hop = std::polar(1.0, kl);
    const Complex denominator = 2.0 * (1.0 - m1.r * m2.r * hop * hop);
    if (std::abs(denominator) < 2.0 * kResonanceTolerance) {
        throw NumericalError("undamped cavity resonance in Kirchhoff solution");
    }
    return {(m1.t * noise1 + m1.r * m2.t * hop * noise2) / denominator,
            -hop * (m2.t * noise2 + m2.r * m1.t * hop * noise1) / denominator};
}

double fdt_energy_density_integrand(double omega, const Mirror& m1, const Mirror& m2, double length,
                                    const LineSpec& line, const ThermalSpec& th, double r1_parallel,
                                    double r2_parallel) {
    const double kl = omega / line.c() * length;
    const double z0 = line.z0();
    // Transfer of each unit source to the current and voltage at x = 0.
    const CavityWaveAmplitudes from1 = cavity_wave_currents(1.0, 0.0, m1, m2, kl);
    const CavityWaveAmplitudes from2 = cavity_wave_currents(0.0, 1.0, m1, m2, kl);
    const double s1 = source_spectrum(r1_parallel, omega, th);
    const double s2 = source_spectrum(r2_parallel, omega, th);

    const double current = std::norm(from1.i_plus_0 + from1.i_minus_0) * s1 +
                           std::norm(from2.i_plus_0 + from2.i_minus_0) * s2;
    const double voltage = z0 * z0 *
                           (std::norm(from1.i_plus_0 - from1.i_minus_0) * s1 +
                            std::norm(from2.i_plus_0 - from2.i_minus_0) * s2);
    const double density = 0.5 * line.inductance_per_length() * current + 0.5 * line.capacitance_per_length() * voltage;
    return density / (2.0 * constants::pi);
}

double closed_form_energy_density(double k, const Mirror& m1, const Mirror& m2, double length,
                                  const LineSpec& line, const ThermalSpec& th) {
    const Complex g = m1.r * m2.r * std::polar(1.0, 2.0 * k * length);
    const double leak = one_minus_r_squared(m1) + std::norm(m1.r) * one_minus_r_squared(m2);
    return th.symmetrized_energy(line.c() * k) / (2.0 * constants::pi) * leak / std::norm(1.0 - g);
}

EnergyDensityForms energy_density_forms(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                        double length, double k, const ThermalSpec& th) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("wavenumber must be finite and positive");
    }
    const double omega = line.c() * k;
    auto branch = [&](double w) {
        const Immittance za = eval_impedance(z1, w);
        const Immittance zb = eval_impedance(z2, w);
        const Mirror m1 = reflect_termination(za, line.z0(), w);
        const Mirror m2 = reflect_termination(zb, line.z0(), w);
        return fdt_energy_density_integrand(w, m1, m2, length, line, th, decompose_parallel_rx(za).r,
                                            decompose_parallel_rx(zb).r);
    };
    const Mirror m1 = reflect_termination(z1, line, omega);
    const Mirror m2 = reflect_termination(z2, line, omega);
    return {line.c() * (branch(omega) + branch(-omega)), closed_form_energy_density(k, m1, m2, length, line, th)};
}

} // namespace tlcasimir
