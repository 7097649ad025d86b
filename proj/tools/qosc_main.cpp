#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qosc/baselines.hpp"
#include "qosc/effective_frequency.hpp"
#include "qosc/oracle.hpp"
#include "qosc/pms.hpp"
#include "qosc/rational.hpp"
#include "qosc/series.hpp"
#include "qosc/spectrum.hpp"
#include "qosc/types.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// A result table whose cells keep their type for JSON output and render as
// %.17g / plain strings for CSV.
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<ordered_json>> rows;

    void add_row(std::vector<ordered_json> cells) {
        if (cells.size() != headers.size()) {
            throw std::logic_error("internal: row width mismatch");
        }
        rows.push_back(std::move(cells));
    }
};

std::string render_cell_csv(const ordered_json& cell) {
    if (cell.is_string()) return cell.get<std::string>();
    if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
    return fmt17(cell.get<double>());
}

struct OutputOptions {
    std::string format = "csv";
    std::string output;
};

void emit(const Table& table, const ordered_json& meta, const OutputOptions& out) {
    std::string text;
    if (out.format == "csv") {
        for (size_t i = 0; i < table.headers.size(); ++i) {
            if (i) text += ',';
            text += table.headers[i];
        }
        text += '\n';
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) text += ',';
                text += render_cell_csv(row[i]);
            }
            text += '\n';
        }
    } else if (out.format == "json") {
        ordered_json doc;
        doc["meta"] = meta;
        doc["rows"] = ordered_json::array();
        for (const auto& row : table.rows) {
            ordered_json obj = ordered_json::object();
            for (size_t i = 0; i < row.size(); ++i) obj[table.headers[i]] = row[i];
            doc["rows"].push_back(std::move(obj));
        }
        text = doc.dump(2);
        text += '\n';
    } else {
        throw UsageError("unknown format '" + out.format + "' (expected csv or json)");
    }

    if (out.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out.output, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file " + out.output);
        file << text;
        if (!file) throw std::runtime_error("write failed for " + out.output);
    }
}

struct NumericOptions {
    double omega = 1.0;
    double g = 1.0;
    double quad_tol = 1e-12;
    double solver_tol = 1e-12;
    int basis_size = 300;
};

ordered_json make_meta(const NumericOptions& num, const ordered_json& g_value) {
    ordered_json meta;
    meta["omega"] = num.omega;
    meta["g"] = g_value;
    meta["tolerances"] = {{"quad_tol", num.quad_tol},
                          {"solver_tol", num.solver_tol},
                          {"basis_size", num.basis_size}};
    meta["version"] = kVersion;
    return meta;
}

qosc::OscillatorParams params_of(const NumericOptions& num) {
    return qosc::OscillatorParams{num.omega, num.g};
}

qosc::BasisSpec basis_of(const NumericOptions& num) {
    qosc::BasisSpec basis;
    basis.size = num.basis_size;
    return basis;
}

struct BetaRange {
    std::optional<double> single;
    double min = 0.0;
    double max = 0.0;
    int steps = 0;

    std::vector<double> values() const {
        if (single) return {*single};
        if (steps < 1) throw UsageError("--steps must be at least 1");
        if (!(min > 0.0)) throw UsageError("--beta-min must be positive");
        if (max < min) throw UsageError("--beta-max must not be below --beta-min");
        if (steps == 1) {
            if (max != min) throw UsageError("--steps 1 requires --beta-min == --beta-max");
            return {min};
        }
        std::vector<double> v;
        v.reserve(steps);
        for (int i = 0; i < steps; ++i) {
            v.push_back(min + (max - min) * i / (steps - 1));
        }
        return v;
    }
};

qosc::Model parse_model(const std::string& name) {
    static const std::map<std::string, qosc::Model> table = {
        {"pms", qosc::Model::pms},   {"fk", qosc::Model::fk},
        {"bf", qosc::Model::bf},     {"exact", qosc::Model::exact},
        {"classical", qosc::Model::classical}, {"harmonic", qosc::Model::harmonic}};
    const auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown model '" + name + "'");
    return it->second;
}

std::vector<qosc::Model> parse_models(const std::string& list) {
    std::vector<qosc::Model> models;
    std::string token;
    std::stringstream in(list);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        const qosc::Model m = parse_model(token);
        bool seen = false;
        for (const auto& other : models) seen = seen || other == m;
        if (!seen) models.push_back(m);
    }
    if (models.empty()) throw UsageError("--model list is empty");
    return models;
}

// ---------------------------------------------------------------- commands

int cmd_z(const NumericOptions& num, const OutputOptions& out, const BetaRange& range,
          const std::string& model_list) {
    const auto models = parse_models(model_list);
    const auto params = params_of(num);
    const auto betas = range.values();

    bool wants_exact = false;
    for (const auto m : models) wants_exact = wants_exact || m == qosc::Model::exact;
    std::optional<qosc::ExactSpectrum> spectrum;
    if (wants_exact) spectrum = qosc::exact_spectrum(params, basis_of(num));

    auto evaluate = [&](double beta, qosc::Model m) -> qosc::ThermoPoint {
        switch (m) {
            case qosc::Model::pms:
                return qosc::partition_function(beta, params, num.solver_tol);
            case qosc::Model::fk:
                return qosc::fk_partition(beta, params);
            case qosc::Model::bf:
                return qosc::bf_partition(beta, params);
            case qosc::Model::exact:
                return qosc::exact_partition(beta, *spectrum);
            case qosc::Model::classical:
                return qosc::classical_partition(beta, params, num.quad_tol);
            case qosc::Model::harmonic:
                return qosc::make_thermo_point(
                    beta, qosc::harmonic_log_partition(beta, params.omega),
                    qosc::Model::harmonic);
        }
        throw std::logic_error("internal: unhandled model");
    };

    Table table;
    table.headers = {"beta", "model", "z", "free_energy"};
    if (wants_exact) table.headers.push_back("error");

    for (const double beta : betas) {
        std::optional<double> z_exact;
        if (wants_exact) z_exact = qosc::exact_partition(beta, *spectrum).z;
        for (const auto m : models) {
            const auto point = evaluate(beta, m);
            std::vector<ordered_json> cells = {beta, qosc::to_string(m), point.z,
                                               point.free_energy};
            if (wants_exact) cells.push_back(point.z - *z_exact);
            table.add_row(std::move(cells));
        }
    }
    emit(table, make_meta(num, num.g), out);
    return 0;
}

int cmd_zn_scan(const NumericOptions& num, const OutputOptions& out, double beta,
                double n_min, double n_max, int n_steps, int fan_count, double fan_width) {
    if (fan_count < 1 || fan_count % 2 == 0) {
        throw UsageError("--fan-count must be a positive odd number");
    }
    if (!(fan_width >= 0.0) || fan_width >= 1.0) {
        throw UsageError("--fan-width must lie in [0, 1)");
    }
    if (n_steps < 2) throw UsageError("--n-steps must be at least 2");
    if (!(n_min > 0.0) || n_max <= n_min) {
        throw UsageError("--n-min must be positive and below --n-max");
    }
    const auto params = params_of(num);

    Table table;
    table.headers = {"n", "curve", "omega_g", "z_n", "pms_marker"};
    const int half = fan_count / 2;
    for (int i = 0; i < n_steps; ++i) {
        const double n = n_min + (n_max - n_min) * i / (n_steps - 1);
        const double wg_center = qosc::omega_g(beta / n, params);
        for (int c = -half; c <= half; ++c) {
            const double scale =
                half == 0 ? 1.0 : 1.0 + fan_width * static_cast<double>(c) / half;
            const double wg = scale * wg_center;
            const double zn = qosc::zn_gaussian(n, beta, wg, params);
            table.add_row({n, c, wg, zn, 0});
        }
    }
    const auto sol = qosc::solve_pms(beta, params, num.solver_tol);
    const double z_star = qosc::zn_gaussian(sol.n_c, beta, sol.omega_g_star, params);
    table.add_row({sol.n_c, 0, sol.omega_g_star, z_star, 1});

    emit(table, make_meta(num, num.g), out);
    return 0;
}

int cmd_energies(const NumericOptions& num, const OutputOptions& out,
                 const std::vector<double>& g_list) {
    if (g_list.empty()) throw UsageError("--g-list must contain at least one value");
    Table table;
    table.headers = {"g",        "e0_model", "e1_model",  "e0_exact",
                     "e1_exact", "gap_model", "gap_exact", "gap_error_percent"};
    for (const double g : g_list) {
        NumericOptions local = num;
        local.g = g;
        const auto params = params_of(local);
        const auto model = qosc::gap_quantities(params);
        const auto spectrum = qosc::exact_spectrum(params, basis_of(local));
        const double gap_model = model.e1 - model.e0;
        const double gap_exact = spectrum.energies[1] - spectrum.energies[0];
        table.add_row({g, model.e0, model.e1, spectrum.energies[0], spectrum.energies[1],
                       gap_model, gap_exact,
                       qosc::relative_error_percent(gap_model, gap_exact)});
    }
    ordered_json gs = ordered_json::array();
    for (const double g : g_list) gs.push_back(g);
    emit(table, make_meta(num, gs), out);
    return 0;
}

int cmd_series(const NumericOptions& num, const OutputOptions& out, const std::string& kind,
               int order) {
    Table table;
    if (kind == "weak") {
        if (order < 0) throw UsageError("--order must be non-negative");
        const auto e = qosc::weak_coupling_energy(order, num.omega);
        table.headers = {"n", "coefficient", "decimal"};
        for (int n = 0; n <= order; ++n) {
            table.add_row({n, qosc::to_fraction_string(e.coefficients[n]),
                           qosc::to_double(e.coefficients[n])});
        }
    } else if (kind == "strong") {
        const auto c = qosc::strong_coupling_coeffs(num.omega);
        const auto ref = qosc::strong_coupling_exact_reference();
        table.headers = {"n", "b_n", "omega_n", "j_n", "alpha_n", "alpha_exact_reference"};
        for (int n = 0; n < 3; ++n) {
            table.add_row({n, c.b[n], c.omega_n[n], c.j_n[n], c.alpha_n[n], ref[n]});
        }
    } else {
        throw UsageError("--kind must be weak or strong");
    }
    emit(table, make_meta(num, num.g), out);
    return 0;
}

int cmd_compare(const NumericOptions& num, const OutputOptions& out,
                const std::vector<double>& g_list, const std::vector<double>& beta_list) {
    if (g_list.empty() || beta_list.empty()) {
        throw UsageError("--g-list and --beta-list must be non-empty");
    }
    Table table;
    table.headers = {"g", "beta", "eps_bf_percent", "eps_fk_percent", "eps_model_percent"};
    for (const double g : g_list) {
        NumericOptions local = num;
        local.g = g;
        const auto params = params_of(local);
        const auto spectrum = qosc::exact_spectrum(params, basis_of(local));
        for (const double beta : beta_list) {
            const double f_ex = qosc::exact_partition(beta, spectrum).free_energy;
            const double f_bf = qosc::bf_partition(beta, params).free_energy;
            const double f_fk = qosc::fk_partition(beta, params).free_energy;
            const double f_model =
                qosc::partition_function(beta, params, num.solver_tol).free_energy;
            table.add_row({g, beta, qosc::relative_error_percent(f_bf, f_ex),
                           qosc::relative_error_percent(f_fk, f_ex),
                           qosc::relative_error_percent(f_model, f_ex)});
        }
    }
    ordered_json gs = ordered_json::array();
    for (const double g : g_list) gs.push_back(g);
    emit(table, make_meta(num, gs), out);
    return 0;
}

int cmd_gap_scan(const NumericOptions& num, const OutputOptions& out, const BetaRange& range) {
    const auto params = params_of(num);
    const auto spectrum = qosc::exact_spectrum(params, basis_of(num));
    Table table;
    table.headers = {"beta", "gap_model", "gap_bf", "gap_fk", "gap_exact"};
    for (const double beta : range.values()) {
        const auto model = qosc::finite_temperature_energies(beta, params);
        const auto exact = qosc::exact_finite_temperature_energies(beta, spectrum);
        table.add_row({beta, model.gap_beta, qosc::bf_gap(beta, params),
                       qosc::fk_gap(beta, params), exact.gap_beta});
    }
    emit(table, make_meta(num, num.g), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form quartic-oscillator partition function toolkit"};
    app.require_subcommand(1);

    NumericOptions num;
    OutputOptions out;

    const auto add_common = [&](CLI::App* cmd, bool with_g = true) {
        cmd->add_option("--omega", num.omega, "harmonic frequency")->capture_default_str();
        if (with_g) {
            cmd->add_option("--g", num.g, "quartic coupling")->capture_default_str();
        }
        cmd->add_option("--quad-tol", num.quad_tol, "quadrature relative tolerance")
            ->capture_default_str();
        cmd->add_option("--solver-tol", num.solver_tol, "fixed-point solver tolerance")
            ->capture_default_str();
        cmd->add_option("--basis-size", num.basis_size, "reference-spectrum basis size")
            ->capture_default_str();
        cmd->add_option("--format", out.format, "output format: csv or json")
            ->capture_default_str();
        cmd->add_option("--output", out.output, "write output to a file instead of stdout");
    };

    // z
    BetaRange z_range;
    double z_beta = 0.0;
    z_range.min = 0.3;
    z_range.max = 10.0;
    z_range.steps = 98;
    std::string z_models = "pms";
    auto* z_cmd = app.add_subcommand("z", "partition function vs beta for selected models");
    add_common(z_cmd);
    auto* z_beta_opt = z_cmd->add_option("--beta", z_beta, "single inverse temperature");
    z_cmd->add_option("--beta-min", z_range.min, "range start")->capture_default_str();
    z_cmd->add_option("--beta-max", z_range.max, "range end")->capture_default_str();
    z_cmd->add_option("--steps", z_range.steps, "number of grid points")->capture_default_str();
    z_cmd->add_option("--model", z_models, "comma-separated: pms,fk,bf,exact,classical,harmonic")
        ->capture_default_str();

    // zn-scan
    double scan_beta = 5.0, scan_nmin = 1.0, scan_nmax = 15.0, scan_width = 0.3;
    int scan_steps = 57, scan_count = 13;
    auto* scan_cmd =
        app.add_subcommand("zn-scan", "gaussian n-slice approximant over a fan of omega_g");
    add_common(scan_cmd);
    scan_cmd->add_option("--beta", scan_beta, "inverse temperature")->capture_default_str();
    scan_cmd->add_option("--n-min", scan_nmin, "smallest slice count")->capture_default_str();
    scan_cmd->add_option("--n-max", scan_nmax, "largest slice count")->capture_default_str();
    scan_cmd->add_option("--n-steps", scan_steps, "grid points in n")->capture_default_str();
    scan_cmd->add_option("--fan-count", scan_count, "number of fan curves (odd)")
        ->capture_default_str();
    scan_cmd->add_option("--fan-width", scan_width, "half-width of the relative fan")
        ->capture_default_str();

    // energies
    std::vector<double> energies_g = {0.01, 1.0, 10.0};
    auto* energies_cmd =
        app.add_subcommand("energies", "model vs exact low-lying energies and gap error");
    add_common(energies_cmd, /*with_g=*/false);
    energies_cmd->add_option("--g-list", energies_g, "couplings")
        ->delimiter(',')
        ->check(CLI::Number)
        ->capture_default_str();

    // series
    std::string series_kind = "weak";
    int series_order = 5;
    auto* series_cmd =
        app.add_subcommand("series", "weak- or strong-coupling expansion coefficients");
    add_common(series_cmd);
    series_cmd->add_option("--kind", series_kind, "weak or strong")->capture_default_str();
    series_cmd->add_option("--order", series_order, "truncation order (weak)")
        ->capture_default_str();

    // compare
    std::vector<double> compare_g = {0.01, 1.0, 10.0};
    std::vector<double> compare_beta = {10.0, 5.0, 2.0, 1.0, 0.1};
    auto* compare_cmd = app.add_subcommand(
        "compare", "percent free-energy errors of the bounds and the model vs exact");
    add_common(compare_cmd, /*with_g=*/false);
    compare_cmd->add_option("--g-list", compare_g, "couplings")
        ->delimiter(',')
        ->check(CLI::Number)
        ->capture_default_str();
    compare_cmd->add_option("--beta-list", compare_beta, "inverse temperatures")
        ->delimiter(',')
        ->check(CLI::Number)
        ->capture_default_str();

    // gap-scan
    BetaRange gap_range;
    double gap_beta_single = 0.0;
    gap_range.min = 1.0;
    gap_range.max = 30.0;
    gap_range.steps = 30;
    auto* gap_cmd = app.add_subcommand("gap-scan", "finite-temperature gap estimators vs beta");
    add_common(gap_cmd);
    auto* gap_beta_opt = gap_cmd->add_option("--beta", gap_beta_single, "single beta");
    gap_cmd->add_option("--beta-min", gap_range.min, "range start")->capture_default_str();
    gap_cmd->add_option("--beta-max", gap_range.max, "range end")->capture_default_str();
    gap_cmd->add_option("--steps", gap_range.steps, "number of grid points")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (z_cmd->parsed()) {
            if (z_beta_opt->count() > 0) z_range.single = z_beta;
            return cmd_z(num, out, z_range, z_models);
        }
        if (scan_cmd->parsed()) {
            return cmd_zn_scan(num, out, scan_beta, scan_nmin, scan_nmax, scan_steps,
                               scan_count, scan_width);
        }
        if (energies_cmd->parsed()) return cmd_energies(num, out, energies_g);
        if (series_cmd->parsed()) return cmd_series(num, out, series_kind, series_order);
        if (compare_cmd->parsed()) return cmd_compare(num, out, compare_g, compare_beta);
        if (gap_cmd->parsed()) {
            if (gap_beta_opt->count() > 0) gap_range.single = gap_beta_single;
            return cmd_gap_scan(num, out, gap_range);
        }
        std::cerr << "error: no command selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
