#include "tlcasimir/cli.hpp"

#include "report.hpp"
#include "tlcasimir/constants.hpp"
#include "tlcasimir/errors.hpp"
#include "tlcasimir/fdt.hpp"
#include "tlcasimir/force.hpp"
#include "tlcasimir/netlist.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

namespace tlcasimir::cli {

namespace {

const char* flavor_name(MirrorFlavor f) { return f == MirrorFlavor::Terminating ? "terminating" : "embedded"; }

const char* param_name(SweepParam p) {
    switch (p) {
    case SweepParam::Length: return "l";
    case SweepParam::UC: return "uC";
    case SweepParam::UL: return "uL";
    case SweepParam::Resistance: return "R";
    case SweepParam::Temperature: return "T";
    }
    return "?";
}

const char* quantity_name(SpectrumQuantity q) {
    switch (q) {
    case SpectrumQuantity::Nyquist: return "nyquist";
    case SpectrumQuantity::Input: return "input";
    case SpectrumQuantity::EnergyDensity: return "energy_density";
    }
    return "?";
}

// The single capacitor/inductor value across both netlists, if there is exactly one.
struct SoleElements {
    std::optional<double> farads;
    std::optional<double> henries;
};

void collect(const ImpedanceExpr& e, std::vector<double>& caps, std::vector<double>& inds) {
    const auto& node = e.node();
    if (const auto* c = std::get_if<Capacitor>(&node)) caps.push_back(c->farads);
    if (const auto* l = std::get_if<Inductor>(&node)) inds.push_back(l->henries);
    if (const auto* s = std::get_if<Series>(&node)) {
        for (const auto& child : s->children) collect(child, caps, inds);
    }
    if (const auto* p = std::get_if<Parallel>(&node)) {
        for (const auto& child : p->children) collect(child, caps, inds);
    }
}

SoleElements sole_elements(const Problem& p) {
    std::vector<double> caps;
    std::vector<double> inds;
    collect(p.z1, caps, inds);
    collect(p.z2, caps, inds);
    SoleElements out;
    if (caps.size() == 1) out.farads = caps.front();
    if (inds.size() == 1) out.henries = inds.front();
    return out;
}

struct SignSummary {
    std::size_t attractive = 0;
    std::size_t repulsive = 0;
    std::size_t neutral = 0;
    std::size_t samples = 0;

    std::string classification() const {
        if (attractive == samples) return "attractive";
        if (repulsive == samples) return "repulsive";
        if (neutral == samples) return "none";
        return "mixed";
    }
};

SignSummary summarize_signs(const Problem& p, MirrorFlavor flavor) {
    const std::vector<double> grid = grid_values({1e-3, 1e2, 51, GridScale::Log});
    SignSummary s;
    for (const SignSample& x : sign_profile(p.z1, p.z2, p.line, p.length, grid, flavor)) {
        ++s.samples;
        if (x.product_sign > 0) ++s.attractive;
        else if (x.product_sign < 0) ++s.repulsive;
        else ++s.neutral;
    }
    return s;
}

std::string common_settings_json(const RunConfig& cfg, int indent) {
    JsonObject o;
    o.string("z1", cfg.z1_netlist)
        .string("z2", cfg.z2_netlist)
        .number("z0", cfg.z0)
        .number("c", cfg.c)
        .number("l", cfg.length)
        .number("temperature", cfg.temperature)
        .string("flavor", flavor_name(cfg.flavor));
    return o.render(indent);
}

RunConfig with_sweep_value(RunConfig cfg, double value) {
    switch (cfg.sweep_param) {
    case SweepParam::Length: cfg.length = value; break;
    case SweepParam::UC: cfg.u_c = value; break;
    case SweepParam::UL: cfg.u_l = value; break;
    case SweepParam::Resistance: cfg.resistance = value; break;
    case SweepParam::Temperature: cfg.temperature = value; break;
    }
    return cfg;
}

struct SweepRow {
    double value = 0.0;
    ForceResult result;
    std::string failure;
};

template <class Job>
void run_parallel(std::size_t count, unsigned threads, Job job) {
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) job(i);
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < workers; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

} // namespace

double capacitor_u(double farads, const LineSpec& line, double length) {
    return length / (line.c() * line.z0() * farads);
}

double inductor_u(double henries, const LineSpec& line, double length) {
    return length * line.z0() / (line.c() * henries);
}

Problem build_problem(const RunConfig& cfg) {
    const LineSpec line(cfg.z0, cfg.c);
    ElementOverrides overrides;
    if (cfg.u_c) overrides.farads = cfg.length / (cfg.c * cfg.z0 * *cfg.u_c);
    if (cfg.u_l) overrides.henries = cfg.length * cfg.z0 / (cfg.c * *cfg.u_l);
    if (cfg.resistance) overrides.ohms = *cfg.resistance;
    auto load = [&](const std::string& text) {
        return with_element_values(parse_netlist(text.empty() ? "open" : text), overrides);
    };
    return Problem{load(cfg.z1_netlist), load(cfg.z2_netlist), line, cfg.length, ThermalSpec(cfg.temperature)};
}

int run_force(const RunConfig& cfg, std::ostream& out) {
    const Problem p = build_problem(cfg);
    const ForceResult r = compute_force(p.z1, p.z2, p.line, p.length, p.thermal, cfg.quadrature, cfg.flavor);
    const SoleElements sole = sole_elements(p);
    std::optional<double> u_c;
    std::optional<double> u_l;
    if (sole.farads) u_c = capacitor_u(*sole.farads, p.line, p.length);
    if (sole.henries) u_l = inductor_u(*sole.henries, p.line, p.length);
    const SignSummary signs = summarize_signs(p, cfg.flavor);

    if (cfg.output_format() == OutputFormat::Csv) {
        out << "f_si_newtons,f_over_f0,error_estimate,u_C,u_L,sign_summary\n";
        out << csv_row({format_number(r.force_si), format_number(r.f_normalized), format_number(r.error_estimate),
                        u_c ? format_number(*u_c) : "", u_l ? format_number(*u_l) : "", signs.classification()});
        return kExitOk;
    }
    JsonObject sign_json;
    sign_json.string("classification", signs.classification())
        .integer("samples", static_cast<long long>(signs.samples))
        .integer("attractive", static_cast<long long>(signs.attractive))
        .integer("repulsive", static_cast<long long>(signs.repulsive))
        .integer("neutral", static_cast<long long>(signs.neutral));
    JsonObject o;
    o.string("command", "force")
        .raw("settings", common_settings_json(cfg, 2))
        .number("f_si_newtons", r.force_si)
        .number("f_over_f0", r.f_normalized)
        .number("error_estimate", r.error_estimate)
        .number("f0_newtons", r.reference_force)
        .raw("u_C", u_c ? json_number(*u_c) : "null")
        .raw("u_L", u_l ? json_number(*u_l) : "null")
        .integer("evaluations", static_cast<long long>(r.evaluations))
        .integer("matsubara_terms", static_cast<long long>(r.matsubara_terms))
        .raw("sign_summary", sign_json.render(2));
    out << o.render() << '\n';
    return kExitOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
    const std::vector<double> values = grid_values(*cfg.sweep);
    std::vector<SweepRow> rows(values.size());
    run_parallel(values.size(), cfg.threads, [&](std::size_t i) {
        rows[i].value = values[i];
        try {
            const RunConfig point = with_sweep_value(cfg, values[i]);
            point.validate();
            const Problem p = build_problem(point);
            rows[i].result = compute_force(p.z1, p.z2, p.line, p.length, p.thermal, point.quadrature, point.flavor);
        } catch (const std::exception& e) {
            rows[i].failure = std::string("FAILED: ") + e.what();
        }
    });

    const char* name = param_name(cfg.sweep_param);
    if (cfg.output_format() == OutputFormat::Csv) {
        out << "param,value,f_si,f_over_f0,err\n";
        for (const SweepRow& row : rows) {
            if (row.failure.empty()) {
                out << csv_row({name, format_number(row.value), format_number(row.result.force_si),
                                format_number(row.result.f_normalized), format_number(row.result.error_estimate)});
            } else {
                // Failure text is always quoted so the column stays unambiguous.
                std::string quoted = "\"";
                for (char ch : row.failure) {
                    if (ch == '"') quoted += '"';
                    quoted += ch;
                }
                quoted += '"';
                out << csv_row({name, format_number(row.value), "nan", "nan", quoted});
            }
        }
        return kExitOk;
    }
    std::vector<std::string> rendered;
    for (const SweepRow& row : rows) {
        JsonObject o;
        o.number("value", row.value);
        if (row.failure.empty()) {
            o.number("f_si", row.result.force_si)
                .number("f_over_f0", row.result.f_normalized)
                .number("err", row.result.error_estimate)
                .raw("error", "null");
        } else {
            o.raw("f_si", "null").raw("f_over_f0", "null").raw("err", "null").string("error", row.failure);
        }
        rendered.push_back(o.render(4));
    }
    JsonObject o;
    o.string("command", "sweep")
        .raw("settings", common_settings_json(cfg, 2))
        .string("param", name)
        .raw("rows", json_array(rendered, 2));
    out << o.render() << '\n';
    return kExitOk;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
    const std::vector<double> omegas = grid_values(*cfg.omega_grid);
    const ThermalSpec th(cfg.temperature);
    const LineSpec line(cfg.z0, cfg.c);
    const double resistance = cfg.resistance.value_or(cfg.z0);

    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    switch (cfg.quantity) {
    case SpectrumQuantity::Nyquist:
        columns = {"omega", "value"};
        for (double w : omegas) rows.push_back({w, nyquist_current_spectrum(resistance, w, th).value});
        break;
    case SpectrumQuantity::Input:
        columns = {"omega", "value", "qed_value", "abs_diff"};
        for (double w : omegas) {
            const double a = input_spectrum_resistor(resistance, line, w, th).value;
            const double b = input_spectrum_line(resistance, line, w, th).value;
            rows.push_back({w, a, b, std::abs(a - b)});
        }
        break;
    case SpectrumQuantity::EnergyDensity: {
        RunConfig netlists = cfg;
        netlists.resistance.reset();
        const Problem p = build_problem(netlists);
        columns = {"omega", "value", "closed_form", "abs_diff"};
        for (double w : omegas) {
            const EnergyDensityForms f = energy_density_forms(p.z1, p.z2, p.line, p.length, w / cfg.c, th);
            rows.push_back({w, f.circuit_form, f.closed_form, std::abs(f.circuit_form - f.closed_form)});
        }
        break;
    }
    }

    if (cfg.output_format() == OutputFormat::Csv) {
        out << csv_row(columns);
        for (const auto& row : rows) {
            std::vector<std::string> fields;
            for (double v : row) fields.push_back(format_number(v));
            out << csv_row(fields);
        }
        return kExitOk;
    }
    std::vector<std::string> names;
    for (const auto& c : columns) names.push_back(json_string(c));
    std::vector<std::string> rendered;
    for (const auto& row : rows) {
        std::string line_text = "[";
        for (std::size_t k = 0; k < row.size(); ++k) line_text += (k ? ", " : "") + json_number(row[k]);
        rendered.push_back(line_text + "]");
    }
    std::string column_text = "[";
    for (std::size_t k = 0; k < names.size(); ++k) column_text += (k ? ", " : "") + names[k];
    column_text += "]";
    JsonObject o;
    o.string("command", "spectrum")
        .string("quantity", quantity_name(cfg.quantity))
        .number("resistance", resistance)
        .number("z0", cfg.z0)
        .number("temperature", cfg.temperature)
        .raw("columns", column_text)
        .raw("rows", json_array(rendered, 2));
    out << o.render() << '\n';
    return kExitOk;
}

namespace {

struct Check {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;

    bool passed() const { return max_residual <= tolerance; }
    void record(double residual) {
        ++samples;
        if (!(residual <= max_residual)) max_residual = residual; // NaN sticks
    }
};

} // namespace

int run_validate(const RunConfig& cfg, std::ostream& out) {
    const Problem p = build_problem(cfg);
    const std::vector<double> u_grid = grid_values({1e-4, 1e4, 81, GridScale::Log});
    const double scale = p.line.c() / p.length;

    Check passivity{"imaginary_axis_passivity", 0.0, 0.0};
    Check denominator{"force_denominator_positive", 0.0, 0.0};
    Check identity{"energy_identity", 0.0, 1e-12};
    Check sign{"sign_straddle_consistency", 0.0, 0.0};
    Check dual{"energy_density_dual_form", 0.0, 1e-11};
    Check bound{"force_bound", 0.0, 0.0};

    for (const ImpedanceExpr* z : {&p.z1, &p.z2}) {
        for (double u : u_grid) {
            const double zi = eval_impedance_imaginary(*z, u * scale);
            const double r = reflection_imaginary(*z, p.line, u * scale, cfg.flavor);
            passivity.record(std::max({0.0, -zi, std::abs(r) - 1.0}));
            identity.record(energy_identity_residual(*z, p.line, u * scale));
        }
    }
    for (const SignSample& s : sign_profile(p.z1, p.z2, p.line, p.length, u_grid, cfg.flavor)) {
        const double rho = s.r1 * s.r2;
        denominator.record(std::max(0.0, -((1.0 - rho) - rho * std::expm1(-2.0 * s.u))));
        sign.record((s.product_sign < 0) == s.impedances_straddle_z0 ? 0.0 : 1.0);
    }
    for (double u : u_grid) {
        try {
            const EnergyDensityForms f = energy_density_forms(p.z1, p.z2, p.line, p.length, u / p.length, p.thermal);
            const double size = std::max(std::abs(f.circuit_form), std::abs(f.closed_form));
            dual.record(size > 0.0 ? std::abs(f.circuit_form - f.closed_form) / size : 0.0);
        } catch (const NumericalError&) {
            // undamped resonance: both forms are singular there
        }
    }
    const ForceResult r = force_zero_temperature(p.z1, p.z2, p.line, p.length, cfg.quadrature, cfg.flavor);
    bound.record(std::max(0.0, std::abs(r.f_normalized) - 1.0 - r.error_estimate));

    const std::vector<Check> checks = {passivity, denominator, identity, sign, dual, bound};
    const bool all_passed = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });

    if (cfg.output_format() == OutputFormat::Csv) {
        out << "check,passed,max_residual,tolerance,samples\n";
        for (const Check& c : checks) {
            out << csv_row({c.name, c.passed() ? "true" : "false", format_number(c.max_residual),
                            format_number(c.tolerance), std::to_string(c.samples)});
        }
    } else {
        std::vector<std::string> rendered;
        for (const Check& c : checks) {
            JsonObject o;
            o.string("name", c.name)
                .boolean("passed", c.passed())
                .number("max_residual", c.max_residual)
                .number("tolerance", c.tolerance)
                .integer("samples", static_cast<long long>(c.samples));
            rendered.push_back(o.render(4));
        }
        JsonObject o;
        o.string("command", "validate")
            .raw("settings", common_settings_json(cfg, 2))
            .boolean("passed", all_passed)
            .raw("checks", json_array(rendered, 2));
        out << o.render() << '\n';
    }
    return all_passed ? kExitOk : kExitInvariant;
}

} // namespace tlcasimir::cli
