#pragma once

// Passive lumped-element impedance networks.
//
// Time dependence is e^{-i omega t} throughout, so that
//   Z_R = R,  Z_L = -i omega L,  Z_C = i / (omega C),
// and passive impedances are analytic in the upper half omega-plane. On the
// positive imaginary axis omega = i xi both Z_L = xi L and Z_C = 1/(xi C) are
// real and positive.

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace tlcasimir {

using Complex = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class ImpedanceExpr;

struct Resistor {
    double ohms;
};
struct Inductor {
    double henries;
};
struct Capacitor {
    double farads;
};
struct Short {};
struct Open {};
struct Series {
    std::vector<ImpedanceExpr> children;
};
struct Parallel {
    std::vector<ImpedanceExpr> children;
};

/// Immutable expression tree of R, L, C, short and open elements under series
/// and parallel composition. Construction validates element values.
class ImpedanceExpr {
public:
    using Node = std::variant<Resistor, Inductor, Capacitor, Short, Open, Series, Parallel>;

    static ImpedanceExpr resistor(double ohms);
    static ImpedanceExpr inductor(double henries);
    static ImpedanceExpr capacitor(double farads);
    static ImpedanceExpr short_circuit();
    static ImpedanceExpr open_circuit();
    static ImpedanceExpr series(std::vector<ImpedanceExpr> children);
    static ImpedanceExpr parallel(std::vector<ImpedanceExpr> children);

    const Node& node() const noexcept { return node_; }

    friend bool operator==(const ImpedanceExpr& a, const ImpedanceExpr& b);

private:
    explicit ImpedanceExpr(Node node) : node_(std::move(node)) {}

    Node node_;
};

struct ElementCounts {
    std::size_t resistors = 0;
    std::size_t inductors = 0;
    std::size_t capacitors = 0;
};

ElementCounts count_elements(const ImpedanceExpr& expr);

/// Copy of `expr` with every element of the given kind set to `value`
/// (unset optionals leave that kind untouched).
struct ElementOverrides {
    std::optional<double> ohms;
    std::optional<double> henries;
    std::optional<double> farads;
};
ImpedanceExpr with_element_values(const ImpedanceExpr& expr, const ElementOverrides& overrides);

/// Projective impedance num/den. Open is (1, 0) and short is (0, 1), so both
/// are exact values rather than floating-point infinities.
struct Immittance {
    Complex num;
    Complex den;

    static Immittance open() { return {1.0, 0.0}; }
    static Immittance short_circuit() { return {0.0, 1.0}; }

    bool is_open() const { return den == 0.0; }
    bool is_short() const { return num == 0.0; }

    /// num/den; complex infinity (real part +inf) for an open circuit.
    Complex value() const;
};

Immittance combine_series(const Immittance& a, const Immittance& b);
Immittance combine_parallel(const Immittance& a, const Immittance& b);

/// Evaluates the network at complex angular frequency `omega` [rad/s].
/// At omega == 0 capacitive branches take their exact open-circuit limit.
/// Throws std::invalid_argument for non-finite omega.
Immittance eval_impedance(const ImpedanceExpr& expr, Complex omega);

/// Z(i xi) for xi > 0, clamped to the nonnegative real axis. Returns +inf for
/// an open circuit. Throws InvariantViolation if the imaginary residue exceeds
/// kRealAxisTolerance relative to |Z|.
double eval_impedance_imaginary(const ImpedanceExpr& expr, double xi);

inline constexpr double kRealAxisTolerance = 1e-13;

/// Parallel resistance/reactance pair with Z = i X R / (R + i X).
/// Either member may be +inf (no resistive or no reactive branch).
struct ParallelRX {
    double r;
    double x;
};

/// Splits a passive impedance into a parallel R || iX pair:
/// R = |Z|^2 / Re Z, X = |Z|^2 / Im Z. Purely real Z gives X = inf, purely
/// imaginary Z gives R = inf, Z == 0 gives (0, 0). Re Z < 0 beyond rounding
/// noise throws std::invalid_argument.
ParallelRX decompose_parallel_rx(Complex z);
ParallelRX decompose_parallel_rx(const Immittance& z);

/// Recombines a parallel pair into an impedance (inverse of the above).
Complex recompose_parallel_rx(const ParallelRX& rx);

/// Transmission-line parameters: characteristic impedance and propagation speed.
class LineSpec {
public:
    LineSpec(double z0_ohms, double speed_m_per_s);

    static LineSpec from_per_unit_length(double inductance_h_per_m, double capacitance_f_per_m);

    double z0() const noexcept { return z0_; }
    double c() const noexcept { return c_; }
    double inductance_per_length() const noexcept { return z0_ / c_; }
    double capacitance_per_length() const noexcept { return 1.0 / (z0_ * c_); }

private:
    double z0_;
    double c_;
};

/// Z(i u c / l) / Z0 as an exact ratio of polynomials in the dimensionless
/// imaginary frequency u. Common powers of u are cancelled, so the u -> 0
/// limit and slope are read directly off the low-order coefficients.
/// All coefficients are nonnegative for passive networks.
struct RationalImpedance {
    std::vector<double> num;
    std::vector<double> den;

    double num_coeff(std::size_t i) const { return i < num.size() ? num[i] : 0.0; }
    double den_coeff(std::size_t i) const { return i < den.size() ? den[i] : 0.0; }
};

RationalImpedance rational_impedance(const ImpedanceExpr& expr, const LineSpec& line, double length);

} // namespace tlcasimir
