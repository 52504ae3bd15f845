#include "tlcasimir/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>

namespace tlcasimir::cli {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return s;
}

// Option name as used in config files: case-insensitive, '_' and '-' alike.
std::string config_key(std::string s) {
    std::replace(s.begin(), s.end(), '_', '-');
    return lower(std::move(s));
}

std::string env_name(const std::string& option) {
    std::string out = "TLCASIMIR_";
    for (char ch : option) {
        out += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    return out;
}

struct Bindings {
    std::string z1;
    std::string z2;
    double z0 = 50.0;
    double c = 2.998e8;
    double length = 0.01;
    double temperature = 0.0;
    std::string flavor = "terminating";
    double rel_tol = QuadratureConfig{}.rel_tol;
    double abs_tol = QuadratureConfig{}.abs_tol;
    std::size_t max_subdivisions = QuadratureConfig{}.max_subdivisions;
    std::string format;
    std::optional<double> u_c;
    std::optional<double> u_l;
    std::optional<double> resistance;
    std::string param;
    std::optional<double> sweep_min;
    std::optional<double> sweep_max;
    std::optional<std::size_t> sweep_points;
    std::string sweep_scale = "linear";
    std::string quantity = "nyquist";
    std::optional<double> omega_min;
    std::optional<double> omega_max;
    std::optional<std::size_t> omega_points;
    std::string omega_scale = "linear";
    unsigned threads = 0;
    std::string config_file;
};

struct Parsed {
    std::unique_ptr<CLI::App> app;
    Bindings values;
    Command command = Command::Force;
};

const std::map<std::string, Command> kCommands = {
    {"force", Command::Force},
    {"sweep", Command::Sweep},
    {"spectrum", Command::Spectrum},
    {"validate", Command::Validate},
};

std::unique_ptr<Parsed> parse_once(const std::vector<std::string>& args) {
    auto parsed = std::make_unique<Parsed>();
    parsed->app = std::make_unique<CLI::App>("Casimir force between impedances on a transmission line", "tlcasimir");
    CLI::App& app = *parsed->app;
    Bindings& b = parsed->values;

    app.add_option("--z1", b.z1, "netlist of the left termination");
    app.add_option("--z2", b.z2, "netlist of the right termination");
    app.add_option("--z0", b.z0, "line impedance [ohm]");
    app.add_option("--c", b.c, "propagation speed [m/s]");
    app.add_option("--l", b.length, "separation [m]");
    app.add_option("--T,--temperature", b.temperature, "temperature [K]");
    app.add_option("--flavor", b.flavor, "terminating | embedded");
    app.add_option("--rel-tol", b.rel_tol, "relative quadrature tolerance");
    app.add_option("--abs-tol", b.abs_tol, "absolute tolerance (units of f0)");
    app.add_option("--max-subdivisions", b.max_subdivisions, "quadrature panel budget");
    app.add_option("--format", b.format, "json | csv");
    app.add_option("--uC", b.u_c, "set every capacitor to this l/(c Z0 C)");
    app.add_option("--uL", b.u_l, "set every inductor to this l Z0/(c L)");
    app.add_option("--R", b.resistance, "set every resistor [ohm]; source resistance for spectra");
    app.add_option("--param", b.param, "sweep parameter: l | uC | uL | R | T");
    app.add_option("--min", b.sweep_min, "sweep start");
    app.add_option("--max", b.sweep_max, "sweep end");
    app.add_option("--points", b.sweep_points, "sweep point count");
    app.add_option("--scale", b.sweep_scale, "linear | log");
    app.add_option("--quantity", b.quantity, "nyquist | input | energy_density");
    app.add_option("--omega-min", b.omega_min, "first angular frequency [rad/s]");
    app.add_option("--omega-max", b.omega_max, "last angular frequency [rad/s]");
    app.add_option("--omega-points", b.omega_points, "frequency point count");
    app.add_option("--omega-scale", b.omega_scale, "linear | log");
    app.add_option("--threads", b.threads, "sweep worker threads (0 = all cores)");
    app.add_option("--config", b.config_file, "key = value settings file");

    for (const auto& [name, command] : kCommands) {
        CLI::App* sub = app.add_subcommand(name, "");
        sub->fallthrough();
        sub->parse_complete_callback([p = parsed.get(), cmd = command] { p->command = cmd; });
    }
    app.get_subcommand("force")->description("force for one netlist pair");
    app.get_subcommand("sweep")->description("force over a parameter grid (CSV rows in parameter order)");
    app.get_subcommand("spectrum")->description("noise or energy-density spectra");
    app.get_subcommand("validate")->description("check invariants for a netlist pair");
    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    return parsed;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::map<std::string, std::string> out;
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_file(path);
    } catch (const CLI::Error& e) {
        throw ConfigError("cannot read config file '" + path + "': " + e.what());
    }
    for (const auto& item : items) {
        if (item.name == "++" || item.name == "--") continue;
        if (!item.parents.empty()) {
            throw ConfigError("config sections are not supported ('" + item.fullname() + "')");
        }
        // Unquoted netlists are split at commas by the reader; rejoin them.
        std::string value;
        for (std::size_t k = 0; k < item.inputs.size(); ++k) {
            if (k) value += ',';
            value += item.inputs[k];
        }
        out[config_key(item.name)] = value;
    }
    return out;
}

template <class Enum>
Enum lookup(const std::map<std::string, Enum>& table, const std::string& text, const char* what) {
    const auto it = table.find(lower(text));
    if (it == table.end()) {
        std::string choices;
        for (const auto& [key, value] : table) {
            choices += (choices.empty() ? "" : ", ") + key;
        }
        throw ConfigError(std::string("invalid ") + what + " '" + text + "' (expected one of " + choices + ")");
    }
    return it->second;
}

GridScale scale_of(const std::string& text) {
    return lookup<GridScale>({{"linear", GridScale::Linear}, {"log", GridScale::Log}}, text, "scale");
}

std::optional<GridSpec> grid_of(const std::optional<double>& min, const std::optional<double>& max,
                                const std::optional<std::size_t>& points, const std::string& scale,
                                const char* what) {
    if (!min && !max && !points) return std::nullopt;
    if (!min || !max || !points) {
        throw ConfigError(std::string(what) + " grid needs min, max and points");
    }
    return GridSpec{*min, *max, *points, scale_of(scale)};
}

RunConfig to_run_config(const Bindings& b, Command command) {
    RunConfig cfg;
    cfg.command = command;
    cfg.z1_netlist = b.z1;
    cfg.z2_netlist = b.z2;
    cfg.z0 = b.z0;
    cfg.c = b.c;
    cfg.length = b.length;
    cfg.temperature = b.temperature;
    cfg.flavor = lookup<MirrorFlavor>(
        {{"terminating", MirrorFlavor::Terminating}, {"embedded", MirrorFlavor::Embedded}}, b.flavor, "flavor");
    cfg.quadrature.rel_tol = b.rel_tol;
    cfg.quadrature.abs_tol = b.abs_tol;
    cfg.quadrature.max_subdivisions = b.max_subdivisions;
    if (!b.format.empty()) {
        cfg.format = lookup<OutputFormat>({{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}}, b.format,
                                          "format");
    }
    cfg.u_c = b.u_c;
    cfg.u_l = b.u_l;
    cfg.resistance = b.resistance;
    if (!b.param.empty()) {
        cfg.sweep_param = lookup<SweepParam>({{"l", SweepParam::Length},
                                              {"uc", SweepParam::UC},
                                              {"ul", SweepParam::UL},
                                              {"r", SweepParam::Resistance},
                                              {"t", SweepParam::Temperature}},
                                             b.param, "sweep parameter");
    }
    cfg.sweep = grid_of(b.sweep_min, b.sweep_max, b.sweep_points, b.sweep_scale, "sweep");
    if (cfg.sweep && b.param.empty()) {
        throw ConfigError("sweep grid given without --param");
    }
    cfg.quantity = lookup<SpectrumQuantity>({{"nyquist", SpectrumQuantity::Nyquist},
                                             {"input", SpectrumQuantity::Input},
                                             {"energy_density", SpectrumQuantity::EnergyDensity}},
                                            b.quantity, "quantity");
    cfg.omega_grid = grid_of(b.omega_min, b.omega_max, b.omega_points, b.omega_scale, "omega");
    cfg.threads = b.threads;
    return cfg;
}

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

} // namespace

std::vector<double> grid_values(const GridSpec& grid) {
    if (!std::isfinite(grid.min) || !std::isfinite(grid.max) || !(grid.min < grid.max)) {
        throw ConfigError("grid needs finite min < max");
    }
    if (grid.points < 2) {
        throw ConfigError("grid needs at least 2 points");
    }
    if (grid.scale == GridScale::Log && !(grid.min > 0.0)) {
        throw ConfigError("log grid needs min > 0");
    }
    std::vector<double> out(grid.points);
    const double steps = static_cast<double>(grid.points - 1);
    for (std::size_t k = 0; k < grid.points; ++k) {
        const double s = static_cast<double>(k) / steps;
        out[k] = grid.scale == GridScale::Log ? grid.min * std::pow(grid.max / grid.min, s)
                                              : grid.min + (grid.max - grid.min) * s;
    }
    out.front() = grid.min;
    out.back() = grid.max;
    return out;
}

OutputFormat RunConfig::output_format() const {
    if (format) return *format;
    return command == Command::Sweep || command == Command::Spectrum ? OutputFormat::Csv : OutputFormat::Json;
}

void RunConfig::validate() const {
    if (!positive_finite(z0)) throw ConfigError("z0 must be finite and positive");
    if (!positive_finite(c)) throw ConfigError("c must be finite and positive");
    if (!positive_finite(length)) throw ConfigError("l must be finite and positive");
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) throw ConfigError("T must be finite and >= 0");
    try {
        quadrature.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (u_c && !positive_finite(*u_c)) throw ConfigError("uC must be finite and positive");
    if (u_l && !positive_finite(*u_l)) throw ConfigError("uL must be finite and positive");
    if (resistance && (!(*resistance >= 0.0) || !std::isfinite(*resistance))) {
        throw ConfigError("R must be finite and >= 0");
    }

    const bool needs_netlists = command != Command::Spectrum || quantity == SpectrumQuantity::EnergyDensity;
    if (needs_netlists && (z1_netlist.empty() || z2_netlist.empty())) {
        throw ConfigError("--z1 and --z2 are required");
    }
    if (command == Command::Sweep) {
        if (!sweep) throw ConfigError("sweep needs --param, --min, --max and --points");
        const std::vector<double> values = grid_values(*sweep);
        const bool strictly_positive =
            sweep_param == SweepParam::Length || sweep_param == SweepParam::UC || sweep_param == SweepParam::UL;
        if (strictly_positive && !(values.front() > 0.0)) {
            throw ConfigError("sweep over l, uC or uL needs min > 0");
        }
        if (!(values.front() >= 0.0)) throw ConfigError("sweep values must be >= 0");
    }
    if (command == Command::Spectrum) {
        if (!omega_grid) throw ConfigError("spectrum needs --omega-min, --omega-max and --omega-points");
        const std::vector<double> omegas = grid_values(*omega_grid);
        if (quantity == SpectrumQuantity::EnergyDensity && !(omegas.front() > 0.0)) {
            throw ConfigError("energy_density spectrum needs omega > 0");
        }
        if (quantity == SpectrumQuantity::Nyquist && resistance && !(*resistance > 0.0)) {
            throw ConfigError("nyquist spectrum needs R > 0");
        }
    }
}

std::optional<std::string> process_env(const std::string& name) {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
}

RunConfig parse_run_config(const std::vector<std::string>& args, const EnvLookup& env) {
    // First pass: learn which options the command line set and where the
    // config file lives. Missing options are then filled from the
    // environment, else from the config file, and the line parsed again.
    std::unique_ptr<Parsed> first = parse_once(args);

    std::string config_path = first->values.config_file;
    if (config_path.empty()) {
        if (auto v = env("TLCASIMIR_CONFIG")) config_path = *v;
    }
    std::map<std::string, std::string> file_values;
    if (!config_path.empty()) file_values = read_config_file(config_path);

    std::map<std::string, std::string> known;
    std::vector<std::string> extra;
    for (const CLI::Option* opt : first->app->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string name = opt->get_lnames().front();
        if (name == "help" || name == "config") continue;
        known[config_key(name)] = name;
        for (const std::string& alias : opt->get_lnames()) known[config_key(alias)] = name;
        if (opt->count() > 0) continue;
        std::optional<std::string> value = env(env_name(name));
        if (!value) {
            for (const std::string& alias : opt->get_lnames()) {
                const auto it = file_values.find(config_key(alias));
                if (it != file_values.end()) {
                    value = it->second;
                    break;
                }
            }
        }
        if (value) extra.push_back("--" + name + "=" + *value);
    }
    for (const auto& [key, value] : file_values) {
        if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
    }

    std::vector<std::string> full = args;
    full.insert(full.end(), extra.begin(), extra.end());
    std::unique_ptr<Parsed> second = parse_once(full);
    RunConfig cfg = to_run_config(second->values, second->command);
    cfg.validate();
    return cfg;
}

} // namespace tlcasimir::cli
