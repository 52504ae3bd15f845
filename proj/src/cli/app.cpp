#include "tlcasimir/cli.hpp"

#include "tlcasimir/errors.hpp"

#include <ostream>
#include <sstream>

namespace tlcasimir::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    // Output is buffered so a failing run never leaves a partial report.
    std::ostringstream buffer;
    int code = kExitOk;
    try {
        const RunConfig cfg = parse_run_config(args, env);
        switch (cfg.command) {
        case Command::Force: code = run_force(cfg, buffer); break;
        case Command::Sweep: code = run_sweep(cfg, buffer); break;
        case Command::Spectrum: code = run_spectrum(cfg, buffer); break;
        case Command::Validate: code = run_validate(cfg, buffer); break;
        }
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: netlist: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "error: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const InvariantViolation& e) {
        err << "error: invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    }
    out << buffer.str();
    if (code == kExitInvariant) err << "error: invariant checks failed\n";
    return code;
}

} // namespace tlcasimir::cli
