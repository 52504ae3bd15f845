#pragma once

// Fluctuation-dissipation formulation: every resistive element R carries a
// shunt noise current with the Nyquist spectrum, and the line fields follow
// from Kirchhoff's laws. Spectra are two-sided in omega, normalised so that
// <A^2> = integral over the real line of d(omega)/(2 pi) S_A(omega).

#include "tlcasimir/circuit.hpp"
#include "tlcasimir/mirrors.hpp"
#include "tlcasimir/thermal.hpp"

namespace tlcasimir {

struct NoiseSpectrum {
    double omega;
    double value;
};

/// S_IN = (2 hbar omega / R) / (1 - exp(-beta hbar omega)) [A^2 s].
/// Throws std::invalid_argument unless 0 < R < inf.
NoiseSpectrum nyquist_current_spectrum(double resistance, double omega, const ThermalSpec& th);

struct ChargeCurrentSpectra {
    double charge;  ///< S_Q [C^2 s]
    double current; ///< S_I = omega^2 S_Q [A^2 s]
};

/// Equilibrium charge and current fluctuations of a general element from its
/// dissipative part Re Z / |Z|^2. Lossless elements (including short and
/// open) return zero.
ChargeCurrentSpectra charge_and_current_spectrum(const ImpedanceExpr& expr, double omega, const ThermalSpec& th);

/// Forward voltage noise injected into a line Z0 by a resistor R, from the
/// resistor's Nyquist source and Kirchhoff's laws [V^2 s].
NoiseSpectrum input_spectrum_resistor(double resistance, const LineSpec& line, double omega, const ThermalSpec& th);

/// The same quantity obtained by treating R as a semi-infinite line of
/// impedance R carrying free thermal waves, transmitted into Z0.
NoiseSpectrum input_spectrum_line(double resistance, const LineSpec& line, double omega, const ThermalSpec& th);

/// Forward/backward current amplitudes at x = 0 (the left termination).
struct CavityWaveAmplitudes {
    Complex i_plus_0;
    Complex i_minus_0;
};

/// Kirchhoff solution for noise currents iN1 (at x = 0) and iN2 (at x = l)
/// with terminations described by m1, m2. Throws NumericalError at an
/// undamped resonance.
CavityWaveAmplitudes cavity_wave_currents(Complex noise1, Complex noise2, const Mirror& m1, const Mirror& m2,
                                          double kl);

/// Energy density per unit omega at x = 0+ from the Kirchhoff solution driven
/// by the two uncorrelated terminal noise sources (parallel resistances R1,
/// R2; infinity for lossless terminations). Mirrors must be evaluated at
/// `omega`, which may be negative.
double fdt_energy_density_integrand(double omega, const Mirror& m1, const Mirror& m2, double length,
                                    const LineSpec& line, const ThermalSpec& th, double r1_parallel,
                                    double r2_parallel);

/// Energy density per unit k (k > 0) in closed form:
/// (1/2pi) hbar c k coth(beta hbar c k/2) (1 - |r1 r2|^2) / |1 - r1 r2 e^{2ikl}|^2.
double closed_form_energy_density(double k, const Mirror& m1, const Mirror& m2, double length,
                                  const LineSpec& line, const ThermalSpec& th);

struct EnergyDensityForms {
    double circuit_form; ///< c [f(omega) + f(-omega)] of the Kirchhoff integrand
    double closed_form;
};

/// Both forms at wavenumber k for two terminating impedances, each evaluated
/// independently (mirrors and parallel resistances computed at +omega and
/// -omega separately).
EnergyDensityForms energy_density_forms(const ImpedanceExpr& z1, const ImpedanceExpr& z2, const LineSpec& line,
                                        double length, double k, const ThermalSpec& th);

} // namespace tlcasimir
