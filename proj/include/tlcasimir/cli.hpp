#pragma once

// Command-line front end. Settings come from flags, then TLCASIMIR_* environment
// variables, then a key = value config file, then defaults (first match wins).

#include "tlcasimir/circuit.hpp"
#include "tlcasimir/mirrors.hpp"
#include "tlcasimir/quadrature.hpp"
#include "tlcasimir/thermal.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlcasimir::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitInvariant = 4,
};

/// Invalid flag, config entry or combination of settings.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the argument parser for --help; carries the usage text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Force, Sweep, Spectrum, Validate };
enum class OutputFormat { Json, Csv };
enum class GridScale { Linear, Log };
enum class SweepParam { Length, UC, UL, Resistance, Temperature };
enum class SpectrumQuantity { Nyquist, Input, EnergyDensity };

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t points = 0;
    GridScale scale = GridScale::Linear;
};

/// Ascending grid including both end points. Throws ConfigError unless
/// min < max, points >= 2 and (for log) min > 0.
std::vector<double> grid_values(const GridSpec& grid);

struct RunConfig {
    Command command = Command::Force;
    std::string z1_netlist;
    std::string z2_netlist;
    double z0 = 50.0;
    double c = 2.998e8;
    double length = 0.01;
    double temperature = 0.0;
    MirrorFlavor flavor = MirrorFlavor::Terminating;
    QuadratureConfig quadrature;
    std::optional<OutputFormat> format; ///< per-command default when unset
    std::optional<double> u_c;          ///< rewrite every capacitor to this u_C
    std::optional<double> u_l;          ///< rewrite every inductor to this u_L
    std::optional<double> resistance;   ///< every resistor; spectrum source R
    SweepParam sweep_param = SweepParam::Length;
    std::optional<GridSpec> sweep;
    SpectrumQuantity quantity = SpectrumQuantity::Nyquist;
    std::optional<GridSpec> omega_grid;
    unsigned threads = 0; ///< 0 picks the hardware concurrency

    OutputFormat output_format() const;

    /// Throws ConfigError for missing or out-of-range settings.
    void validate() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string& name)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// args excludes the program name. Throws ConfigError or HelpRequested.
RunConfig parse_run_config(const std::vector<std::string>& args, const EnvLookup& env = process_env);

/// Circuit, line and temperature after applying u_C/u_L/R rewrites.
struct Problem {
    ImpedanceExpr z1;
    ImpedanceExpr z2;
    LineSpec line;
    double length;
    ThermalSpec thermal;
};

Problem build_problem(const RunConfig& cfg);

/// l / (c Z0 C) and l Z0 / (c L).
double capacitor_u(double farads, const LineSpec& line, double length);
double inductor_u(double henries, const LineSpec& line, double length);

int run_force(const RunConfig& cfg, std::ostream& out);
int run_sweep(const RunConfig& cfg, std::ostream& out);
int run_spectrum(const RunConfig& cfg, std::ostream& out);
int run_validate(const RunConfig& cfg, std::ostream& out);

/// Full entry point: parses, dispatches, maps exceptions to exit codes and
/// writes diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

} // namespace tlcasimir::cli
