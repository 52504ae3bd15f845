// One pass/fail line per acceptance criterion. Exit status is the number of
// criteria whose outcome differs from expectation; criteria listed after
// --expect-red are expected to fail (see README for the analysis).

#include "../support/oracles.hpp"
#include "../support/random_circuits.hpp"

#include "tlcasimir/cli.hpp"
#include "tlcasimir/constants.hpp"
#include "tlcasimir/fdt.hpp"
#include "tlcasimir/force.hpp"
#include "tlcasimir/qed.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace tlcasimir;

namespace {

// Pinned tolerances, one per criterion.
constexpr double kTolPerfect = 1e-6;     // 1: relative
constexpr double kMaxSeconds = 1.0;      // 1: runtime
constexpr double kTolMixed = 1e-6;       // 2: relative
constexpr double kTolAsymptote = 0.02;   // 3: relative to the limiting value
constexpr double kTolNoise = 1e-13;      // 4: relative
constexpr double kTolDualForm = 1e-11;   // 5: relative
constexpr double kTolBalance = 1e-12;    // 6: absolute
constexpr double kTolRenorm = 1e-12;     // 7: scaled residual
constexpr double kTolMatsubara = 1e-4;   // 8: relative
constexpr double kTolModeSum = 1e-9;     // 9: relative
constexpr double kTolKirchhoff = 1e-13;  // 10: relative to the noise currents

constexpr double kPi = constants::pi;
const LineSpec kLine(50.0, 2.998e8);
constexpr double kLength = 0.01;

struct Outcome {
    bool passed;
    std::string detail;
};

double cli_f_si(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(args, out, err) != 0) throw std::runtime_error("cli failed: " + err.str());
    std::istringstream in(out.str());
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    return std::stod(row.substr(0, row.find(',')));
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

ImpedanceExpr capacitor_u(double u) { return ImpedanceExpr::capacitor(kLength / (kLine.c() * kLine.z0() * u)); }
ImpedanceExpr inductor_u(double u) { return ImpedanceExpr::inductor(kLength * kLine.z0() / (kLine.c() * u)); }

Outcome perfect_like() {
    const auto start = std::chrono::steady_clock::now();
    const double f = cli_f_si({"force", "--z1", "short", "--z2", "short", "--l", "0.01", "--format", "csv"});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double dimensionless = f * kLength * kLength / (constants::hbar * kLine.c());
    const double err = rel(dimensionless, kPi / 24.0);
    return {err <= kTolPerfect && seconds < kMaxSeconds,
            fmt::format("f l^2/(hbar c) = {:.12e}, rel err {:.2e} (tol {:.0e}), {:.3f} s", dimensionless, err,
                        kTolPerfect, seconds)};
}

Outcome perfect_unlike() {
    const double f = cli_f_si({"force", "--z1", "short", "--z2", "open", "--l", "0.01", "--format", "csv"});
    const double dimensionless = f * kLength * kLength / (constants::hbar * kLine.c());
    const double err = rel(dimensionless, -kPi / 48.0);
    return {err <= kTolMixed,
            fmt::format("f l^2/(hbar c) = {:.12e}, rel err {:.2e} (tol {:.0e})", dimensionless, err, kTolMixed)};
}

Outcome asymptotes() {
    const double a = force_zero_temperature(capacitor_u(1e3), inductor_u(1e3), kLine, kLength).f_normalized;
    const double b = force_zero_temperature(capacitor_u(1e-3), inductor_u(1e3), kLine, kLength).f_normalized;
    const double ea = rel(a, -0.5);
    const double eb = rel(b, 1.0);
    return {ea <= kTolAsymptote && eb <= kTolAsymptote,
            fmt::format("uC=uL=1e3: f/f0 = {:.6f} (off {:.2f}%); uC=1e-3,uL=1e3: f/f0 = {:.6f} (off {:.2f}%); tol {:.0f}%",
                        a, 100 * ea, b, 100 * eb, 100 * kTolAsymptote)};
}

Outcome noise_equivalence() {
    double worst = 0.0;
    const std::vector<double> temps = {0.0, 1e-3, 1e-2, 0.1, 1.0, 4.0, 10.0, 77.0, 300.0, 1e3};
    for (int i = 0; i < 10; ++i) {
        const double r = std::pow(10.0, -1.0 + 0.5 * i);
        for (int j = 0; j < 10; ++j) {
            const double w = (j % 2 ? -1.0 : 1.0) * std::pow(10.0, 6.0 + 0.75 * j);
            for (double t : temps) {
                const ThermalSpec th(t);
                const double a = input_spectrum_resistor(r, kLine, w, th).value;
                const double b = input_spectrum_line(r, kLine, w, th).value;
                if (a == 0.0 && b == 0.0) continue;
                worst = std::max(worst, std::abs(b - a) / a);
            }
        }
    }
    return {worst <= kTolNoise, fmt::format("max rel diff {:.2e} over 1000 points (tol {:.0e})", worst, kTolNoise)};
}

Outcome dual_form() {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const ImpedanceExpr z1 = testgen::random_lossy_tree(rng, 2);
        const ImpedanceExpr z2 = testgen::random_lossy_tree(rng, 2);
        const double k = testgen::log_uniform(rng, -1, 3.5);
        const ThermalSpec th(n % 4 == 0 ? 0.0 : testgen::log_uniform(rng, -2, 2));
        const EnergyDensityForms f = energy_density_forms(z1, z2, kLine, kLength, k, th);
        worst = std::max(worst, std::abs(f.circuit_form - f.closed_form) / f.closed_form);
    }
    return {worst <= kTolDualForm, fmt::format("max rel diff {:.2e} over 1000 terminations (tol {:.0e})", worst, kTolDualForm)};
}

Outcome balance() {
    std::mt19937_64 rng(77);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const ImpedanceExpr z = testgen::random_tree(rng, 4);
        worst = std::max(worst, energy_identity_residual(z, kLine, testgen::log_uniform(rng, 7, 12)));
    }
    return {worst <= kTolBalance, fmt::format("max residual {:.2e} over 10^4 samples (tol {:.0e})", worst, kTolBalance)};
}

Outcome renormalization() {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const ThermalSpec th(0.4);
    double worst = 0.0;
    for (int n = 0; n < 100000; ++n) {
        const double mag = (1.0 - 1e-6) * std::sqrt(unit(rng));
        const double k = testgen::log_uniform(rng, 0, 3);
        const double kl = k * kLength;
        const Complex g = std::polar(mag, 2.0 * kPi * unit(rng));
        // split g = r1 r2 e^{2ikl} over two lossless mirrors
        const double split = unit(rng) * 2.0 * kPi;
        const double m = std::sqrt(mag);
        const Complex r1 = std::polar(m, split);
        const Complex r2 = g / (r1 * std::polar(1.0, 2.0 * kl));
        const double t = std::sqrt(1.0 - mag);
        const Mirror a{r1, t, MirrorFlavor::Embedded, 0.0};
        const Mirror b{r2, t, MirrorFlavor::Embedded, 0.0};
        const double free = free_density_integrand(k, kLine, th);
        const double lhs = force_integrand_real_axis(k, a, b, kLength, kLine, th);
        const double rhs = free - cavity_density_integrand(k, a, b, kLength, kLine, th);
        const double size = std::max(1.0, (1.0 - std::norm(g)) / std::norm(1.0 - g));
        worst = std::max(worst, std::abs(lhs - rhs) / (free * size));
    }
    return {worst <= kTolRenorm, fmt::format("max scaled residual {:.2e} over 10^5 g (tol {:.0e})", worst, kTolRenorm)};
}

double kelvin_for(double beta_hbar_c_over_l) {
    return constants::hbar * kLine.c() / (beta_hbar_c_over_l * kLength * constants::k_boltzmann);
}

Outcome matsubara() {
    const ImpedanceExpr s = ImpedanceExpr::short_circuit();
    const double cold = force_zero_temperature(s, s, kLine, kLength).force_si;
    std::string detail;
    double previous = INFINITY;
    bool monotone = true;
    double coldest = 0.0;
    for (double ratio : {10.0, 100.0, 1000.0}) {
        const double f = force_finite_temperature(s, s, kLine, kLength, ThermalSpec(kelvin_for(ratio))).force_si;
        coldest = rel(f, cold);
        monotone = monotone && coldest < previous;
        previous = coldest;
        detail += fmt::format("beta hbar c/l={:g}: rel gap {:.2e}; ", ratio, coldest);
    }
    const double kelvin = kelvin_for(1e-3);
    const double hot = force_finite_temperature(s, s, kLine, kLength, ThermalSpec(kelvin)).force_si;
    const double classical = rel(hot, constants::k_boltzmann * kelvin / (2.0 * kLength));
    detail += fmt::format("high T vs k_B T/(2l): rel {:.2e} (tol {:.0e})", classical, kTolMatsubara);
    return {monotone && coldest <= kTolMatsubara && classical <= kTolMatsubara, detail};
}

Outcome mode_sums() {
    const ImpedanceExpr s = ImpedanceExpr::short_circuit();
    const ImpedanceExpr o = ImpedanceExpr::open_circuit();
    const double like = rel(force_zero_temperature(s, s, kLine, kLength).force_si,
                            mode_sum_oracle(BoundaryPair::LikePair, kLine, kLength));
    const double unlike = rel(force_zero_temperature(s, o, kLine, kLength).force_si,
                              mode_sum_oracle(BoundaryPair::UnlikePair, kLine, kLength));
    return {like <= kTolModeSum && unlike <= kTolModeSum,
            fmt::format("like rel {:.2e}, unlike rel {:.2e} (tol {:.0e})", like, unlike, kTolModeSum)};
}

Outcome kirchhoff() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> phase(0.0, 100.0);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    int samples = 0;
    while (samples < 10000) {
        const ImpedanceExpr z1 = testgen::random_tree(rng, 3, true, false);
        const ImpedanceExpr z2 = testgen::random_tree(rng, 3, true, false);
        const double w = testgen::log_uniform(rng, 8, 11);
        const Immittance a = eval_impedance(z1, w);
        const Immittance b = eval_impedance(z2, w);
        if (a.is_open() || a.is_short() || b.is_open() || b.is_short()) continue;
        const Mirror m1 = reflect_termination(a, kLine.z0(), w);
        const Mirror m2 = reflect_termination(b, kLine.z0(), w);
        const double kl = phase(rng);
        if (std::abs(1.0 - m1.r * m2.r * std::polar(1.0, 2.0 * kl)) < 1e-3) continue;
        const Complex n1(normal(rng), normal(rng));
        const Complex n2(normal(rng), normal(rng));
        const CavityWaveAmplitudes s = cavity_wave_currents(n1, n2, m1, m2, kl);
        worst = std::max(worst, oracle::kirchhoff_residual(n1, n2, a.value(), b.value(), kLine.z0(), kl, s.i_plus_0,
                                                           s.i_minus_0));
        ++samples;
    }
    return {worst <= kTolKirchhoff, fmt::format("max residual {:.2e} over 10^4 inputs (tol {:.0e})", worst, kTolKirchhoff)};
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expect_red;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--expect-red" && i + 1 < argc) expect_red.insert(std::stoi(argv[++i]));
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"perfect-mirror force pi/24", perfect_like},
        {"short vs open -pi/48", perfect_unlike},
        {"capacitor/inductor asymptotes", asymptotes},
        {"line vs resistor input noise", noise_equivalence},
        {"energy density dual forms", dual_form},
        {"energy balance identity", balance},
        {"free - cavity = force integrand", renormalization},
        {"Matsubara limits", matsubara},
        {"mode-sum cross-oracle", mode_sums},
        {"Kirchhoff residual", kirchhoff},
    };
    int surprises = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome r{false, ""};
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const bool expected_red = expect_red.count(id) > 0;
        if (r.passed == expected_red) ++surprises;
        fmt::print("criterion {:>2}: {} {} | {}{}\n", id, r.passed ? "PASS" : "FAIL", criteria[i].first, r.detail,
                   expected_red ? (r.passed ? " [expected FAIL, got PASS]" : " [known red]") : "");
    }
    return surprises;
}
