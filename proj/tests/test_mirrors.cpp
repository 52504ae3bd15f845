#include "support/random_circuits.hpp"

#include "tlcasimir/mirrors.hpp"
#include "tlcasimir/netlist.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace tlcasimir;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const LineSpec kLine(50.0, 3e8);
constexpr double kLength = 0.01;

double xi_of(double u) { return u * kLine.c() / kLength; }

} // namespace

TEST_CASE("terminating mirror limits", "[mirrors]") {
    const Mirror s = reflect_termination(ImpedanceExpr::short_circuit(), kLine, 1e9);
    REQUIRE(s.r == -1.0);
    REQUIRE(s.t == 0.0);
    const Mirror o = reflect_termination(ImpedanceExpr::open_circuit(), kLine, 1e9);
    REQUIRE(o.r == 1.0);
    REQUIRE(o.t == 2.0);
    const Mirror m = reflect_termination(ImpedanceExpr::resistor(50), kLine, 1e9);
    REQUIRE(m.r == 0.0);
    REQUIRE(m.flavor == MirrorFlavor::Terminating);
}

TEST_CASE("embedded mirror limits", "[mirrors]") {
    const Mirror o = reflect_embedded(ImpedanceExpr::open_circuit(), kLine, 1e9);
    REQUIRE(o.r == 0.0);
    REQUIRE(o.t == 1.0);
    const Mirror s = reflect_embedded(ImpedanceExpr::short_circuit(), kLine, 1e9);
    REQUIRE(s.r == -1.0);
    REQUIRE(s.t == 0.0);
    REQUIRE(reflect(ImpedanceExpr::short_circuit(), kLine, 1.0, MirrorFlavor::Embedded).flavor ==
            MirrorFlavor::Embedded);
}

TEST_CASE("capacitor reflection in scaled frequency", "[mirrors]") {
    const double u_c = 3.0;
    const double farads = kLength / (kLine.c() * kLine.z0() * u_c);
    const ImpedanceExpr cap = ImpedanceExpr::capacitor(farads);
    for (double u : {0.01, 0.5, 3.0, 10.0, 200.0}) {
        const double r = reflection_imaginary(cap, kLine, xi_of(u), MirrorFlavor::Terminating);
        REQUIRE_THAT(r, WithinAbs((u_c - u) / (u_c + u), 1e-14));
    }
    REQUIRE_THAT(reflection_imaginary(cap, kLine, xi_of(u_c), MirrorFlavor::Terminating), WithinAbs(0.0, 1e-15));
    // complex-frequency path agrees
    const Mirror m = reflect_termination(cap, kLine, Complex(0.0, xi_of(0.5)));
    REQUIRE_THAT(m.r.real(), WithinAbs((u_c - 0.5) / (u_c + 0.5), 1e-14));
    REQUIRE(std::abs(m.r.imag()) < 1e-14);
}

TEST_CASE("series RC reflection and its sign change", "[mirrors]") {
    const double u_c = 2.0;
    const double ratio = 0.4; // R / Z0
    const ImpedanceExpr rc = ImpedanceExpr::series(
        {ImpedanceExpr::resistor(ratio * kLine.z0()),
         ImpedanceExpr::capacitor(kLength / (kLine.c() * kLine.z0() * u_c))});
    for (double u : {0.1, 1.0, 7.0}) {
        const double expected = ((ratio - 1.0) * u + u_c) / ((ratio + 1.0) * u + u_c);
        REQUIRE_THAT(reflection_imaginary(rc, kLine, xi_of(u), MirrorFlavor::Terminating), WithinAbs(expected, 1e-14));
    }
    const double root = u_c / (1.0 - ratio);
    REQUIRE_THAT(reflection_imaginary(rc, kLine, xi_of(root), MirrorFlavor::Terminating), WithinAbs(0.0, 1e-14));
}

TEST_CASE("reflection near zero frequency", "[mirrors]") {
    const double u_c = 2.0;
    const double u_l = 5.0;
    const ImpedanceExpr cap = ImpedanceExpr::capacitor(kLength / (kLine.c() * kLine.z0() * u_c));
    const ImpedanceExpr ind = ImpedanceExpr::inductor(kLength * kLine.z0() / (kLine.c() * u_l));
    const ReflectionSeries c = reflection_near_zero(cap, kLine, kLength, MirrorFlavor::Terminating);
    REQUIRE(c.value == 1.0);
    REQUIRE_THAT(c.slope, WithinRel(-2.0 / u_c, 1e-14));
    const ReflectionSeries l = reflection_near_zero(ind, kLine, kLength, MirrorFlavor::Terminating);
    REQUIRE(l.value == -1.0);
    REQUIRE_THAT(l.slope, WithinRel(2.0 / u_l, 1e-14));
    const ReflectionSeries s = reflection_near_zero(ImpedanceExpr::short_circuit(), kLine, kLength,
                                                    MirrorFlavor::Terminating);
    REQUIRE(s.value == -1.0);
    REQUIRE(s.slope == 0.0);
    // embedded capacitor is transparent at dc
    const ReflectionSeries e = reflection_near_zero(cap, kLine, kLength, MirrorFlavor::Embedded);
    REQUIRE(e.value == 0.0);

    std::mt19937_64 rng(41);
    for (int k = 0; k < 300; ++k) {
        const ImpedanceExpr z = testgen::random_tree(rng, 3);
        for (MirrorFlavor f : {MirrorFlavor::Terminating, MirrorFlavor::Embedded}) {
            const ReflectionSeries series = reflection_near_zero(z, kLine, kLength, f);
            REQUIRE(std::abs(series.value) <= 1.0);
            const double h = 1e-7;
            const double r = reflection_imaginary(z, kLine, xi_of(h), f);
            REQUIRE(std::abs(r - series.value) <= 1e-6 * (1.0 + std::abs(series.slope)));
        }
    }
}

TEST_CASE("imaginary-axis reflections are real and bounded", "[mirrors][property]") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 5000; ++k) {
        const ImpedanceExpr z = testgen::random_tree(rng, 4);
        const double u = testgen::log_uniform(rng, -4, 4);
        for (MirrorFlavor f : {MirrorFlavor::Terminating, MirrorFlavor::Embedded}) {
            const double r = reflection_imaginary(z, kLine, xi_of(u), f);
            REQUIRE(r >= -1.0);
            REQUIRE(r <= 1.0);
            const Mirror m = reflect(z, kLine, Complex(0.0, xi_of(u)), f);
            REQUIRE(std::abs(m.r.imag()) <= 1e-13 * std::max(1.0, std::abs(m.r)));
        }
    }
}

TEST_CASE("t = 1 + r for both flavors", "[mirrors][property]") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> phase(0.0, 3.14);
    for (int k = 0; k < 2000; ++k) {
        const ImpedanceExpr z = testgen::random_tree(rng, 3);
        const Complex w = std::polar(testgen::log_uniform(rng, 8, 11), phase(rng));
        const Mirror m = reflect_termination(z, kLine, w);
        REQUIRE(std::abs(m.t - (1.0 + m.r)) <= 1e-15 * (1.0 + std::abs(m.r)));
        const Mirror e = reflect_embedded(z, kLine, w);
        REQUIRE(std::abs(e.t - (1.0 + e.r)) <= 1e-15 * (1.0 + std::abs(e.r)));
    }
}

TEST_CASE("lossless embedded unitarity", "[mirrors][property]") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 5000; ++k) {
        const ImpedanceExpr z = testgen::random_tree(rng, 4, false);
        const double w = testgen::log_uniform(rng, 8, 11);
        const Mirror m = reflect_embedded(z, kLine, w);
        REQUIRE_THAT(std::norm(m.r) + std::norm(m.t), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("energy balance identity", "[mirrors]") {
    REQUIRE(energy_identity_residual(ImpedanceExpr::resistor(50), kLine, 1e9) == 0.0);
    REQUIRE(energy_identity_residual(ImpedanceExpr::inductor(1e-9), kLine, 1e9) <= 1e-15);
    REQUIRE(energy_identity_residual(ImpedanceExpr::short_circuit(), kLine, 1e9) == 0.0);
    REQUIRE(energy_identity_residual(ImpedanceExpr::open_circuit(), kLine, 1e9) == 0.0);
    REQUIRE(energy_identity_residual(parse_netlist("series(R(25), C(1e-12))"), kLine, 2.0 * 3.141592653589793e9) <=
            1e-12);
    std::mt19937_64 rng(59);
    for (int k = 0; k < 10000; ++k) {
        const ImpedanceExpr z = testgen::random_tree(rng, 4);
        const double w = testgen::log_uniform(rng, 7, 12);
        REQUIRE(energy_identity_residual(z, kLine, w) <= 1e-12);
    }
}
