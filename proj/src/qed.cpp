#include "tlcasimir/qed.hpp"

#include "tlcasimir/constants.hpp"
#include "tlcasimir/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tlcasimir {

namespace {

Complex round_trip(const Mirror& m1, const Mirror& m2, double kl) {
    return m1.r * m2.r * std::polar(1.0, 2.0 * kl);
}

void require_positive_k(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("wavenumber must be finite and positive");
    }
}

void require_lossless(const Mirror& m, const char* which) {
    if (std::abs(std::norm(m.r) + std::norm(m.t) - 1.0) > kLosslessTolerance) {
        throw std::invalid_argument(std::string(which) +
                                    " is lossy; use the fluctuation-dissipation energy density instead");
    }
}

} // namespace

ScatterMatrices scattering_matrices(const Mirror& m1, const Mirror& m2, double kl) {
    const Complex phase = std::polar(1.0, 2.0 * kl);
    const Complex denominator = 1.0 - m1.r * m2.r * phase;
    if (std::abs(denominator) < kResonanceTolerance) {
        throw NumericalError("undamped cavity resonance: |1 - r1 r2 exp(2ikl)| vanishes");
    }
    ScatterMatrices out;
    out.cavity = {{{m1.t / denominator, m1.r * m2.t / denominator},
                   {m2.r * m1.t * phase / denominator, m2.t / denominator}}};
    const Complex tau = m1.t * m2.t / denominator;
    const Complex rho1 = m1.r + m2.r * m1.t * m1.t * phase / denominator;
    const Complex rho2 = m2.r / phase + m1.r * m2.t * m2.t / denominator;
    out.scattering = {{{tau, rho2}, {rho1, tau}}};
    return out;
}

double free_density_integrand(double k, const LineSpec& line, const ThermalSpec& th) {
    require_positive_k(k);
    return th.symmetrized_energy(line.c() * k) / (2.0 * constants::pi);
}

double cavity_density_integrand(double k, const Mirror& m1, const Mirror& m2, double length,
                                const LineSpec& line, const ThermalSpec& th) {
    require_positive_k(k);
    require_lossless(m1, "left mirror");
    require_lossless(m2, "right mirror");
    const Complex g = round_trip(m1, m2, k * length);
    const double leak = one_minus_r_squared(m1) + std::norm(m1.r) * one_minus_r_squared(m2);
    return th.symmetrized_energy(line.c() * k) / (2.0 * constants::pi) * leak / std::norm(1.0 - g);
}

double force_integrand_real_axis(double k, const Mirror& m1, const Mirror& m2, double length,
                                 const LineSpec& line, const ThermalSpec& th) {
    require_positive_k(k);
    const Complex g = round_trip(m1, m2, k * length);
    if (g == 0.0) {
        return 0.0;
    }
    return -th.symmetrized_energy(line.c() * k) / (2.0 * constants::pi) * 2.0 * (g / (1.0 - g)).real();
}

} // namespace tlcasimir
