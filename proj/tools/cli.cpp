#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xmscarf/eop.hpp"
#include "xmscarf/errors.hpp"
#include "xmscarf/oracle.hpp"
#include "xmscarf/potentials.hpp"
#include "xmscarf/suites.hpp"

namespace xmscarf::cli {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, bool, std::string>;

/// A rectangular result plus a few scalar annotations.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    Json params = Json::object();
    std::vector<std::pair<std::string, Cell>> notes;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<V, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<V, bool>) {
                return v ? "true" : "false";
            } else {
                if (v.find_first_of(",\"\n") == std::string::npos) return v;
                std::string q = "\"";
                for (char ch : v) {
                    if (ch == '"') q += '"';
                    q += ch;
                }
                return q + "\"";
            }
        },
        c);
}

Json json_value(const Cell& c) {
    return std::visit([](const auto& v) { return Json(v); }, c);
}

void write_csv(const Table& t, std::ostream& os) {
    for (const auto& [key, value] : t.notes) os << "# " << key << "=" << csv_field(value) << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
}

void write_json(const Table& t, std::ostream& os) {
    Json doc;
    doc["command"] = t.command;
    doc["params"] = t.params;
    for (const auto& [key, value] : t.notes) doc[key] = json_value(value);
    doc["columns"] = t.columns;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = json_value(row[i]);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// start:stop:step, inclusive of stop up to rounding.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("grid '" + text + "' is not of the form start:stop:step");
        }
    }
    if (parts.size() != 3) throw UsageError("grid '" + text + "' is not of the form start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0) || !(stop >= start)) throw UsageError("grid requires step > 0 and stop >= start");
    const double span = (stop - start) / step;
    if (span > 1e7) throw UsageError("grid has too many points");
    const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> xs(count);
    for (long i = 0; i < count; ++i) xs[i] = start + i * step;
    return xs;
}

Family parse_family(const std::string& name) {
    if (name == "trig") return Family::TrigScarf;
    if (name == "shifted") return Family::ShiftedTrigScarf;
    if (name == "hyper") return Family::HyperbolicScarf;
    throw UsageError("unknown family '" + name + "'");
}

struct SpecArgs {
    std::string family = "trig";
    int m = 0;
    double a = 3.5;
    double b = 2.0;
    double k = 1.0;
    double eps = 0.3;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "trig | shifted | hyper")->check(CLI::IsMember({"trig", "shifted", "hyper"}));
        cmd->add_option("--m", m, "codimension m >= 0");
        cmd->add_option("--a", a, "parameter a");
        cmd->add_option("--b", b, "parameter b");
        cmd->add_option("--k", k, "inverse length k > 0");
        cmd->add_option("--eps", eps, "imaginary shift (shifted family)");
    }

    PotentialSpec spec() const {
        PotentialSpec s{parse_family(family), m, a, b, k, family == "shifted" ? eps : 0.0};
        validate(s);
        return s;
    }

    Json json() const {
        Json j;
        j["family"] = family;
        j["m"] = m;
        j["a"] = a;
        j["b"] = b;
        j["k"] = k;
        if (family == "shifted") j["eps"] = eps;
        return j;
    }
};

std::vector<double> default_xs(const PotentialSpec& spec) {
    if (spec.family == Family::TrigScarf) {
        const GridSpec g = trig_grid(spec.k, 101, 1e-2);
        std::vector<double> xs(g.n_points);
        for (int i = 0; i < g.n_points; ++i) xs[i] = g.at(i);
        return xs;
    }
    return parse_grid("-5:5:0.1");
}

std::string describe_error(const SingularPoint& e) {
    return std::string("singular point: ") + e.what();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exceptional Jacobi polynomials and rationally extended Scarf potentials"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    std::string output_path;
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output_path, "write the table to PATH instead of stdout");

    // poly
    auto* poly = app.add_subcommand("poly", "classical Jacobi P_n^(a,b) on a grid");
    int poly_n = 0;
    double poly_a = 0.0, poly_b = 0.0;
    std::string poly_xs = "-1:1:0.25";
    bool poly_ode = false;
    poly->add_option("--n", poly_n, "degree")->required();
    poly->add_option("--a", poly_a, "parameter a");
    poly->add_option("--b", poly_b, "parameter b");
    poly->add_option("--xs", poly_xs, "grid start:stop:step");
    poly->add_flag("--check-ode", poly_ode, "append the Jacobi ODE residual");

    // eop
    auto* eop = app.add_subcommand("eop", "exceptional X_m Jacobi polynomial on a grid");
    std::optional<int> eop_n;
    double eop_a = 2.0, eop_b = 1.0;
    int eop_m = 1;
    std::string eop_xs = "-1:1:0.25";
    bool eop_ode = false;
    eop->add_option("--n", eop_n, "degree n >= m (default m)");
    eop->add_option("--a", eop_a, "parameter a");
    eop->add_option("--b", eop_b, "parameter b");
    eop->add_option("--m", eop_m, "codimension m >= 0");
    eop->add_option("--xs", eop_xs, "grid start:stop:step");
    eop->add_flag("--check-ode", eop_ode, "append the X_m ODE residual");

    // potential / wavefunction
    auto* pot = app.add_subcommand("potential", "potential V(x) of a family member on a grid");
    SpecArgs pot_args;
    std::string pot_xs;
    pot_args.attach(pot);
    pot->add_option("--xs", pot_xs, "grid start:stop:step");

    auto* wf = app.add_subcommand("wavefunction", "eigenfunction psi_n(x) on a grid");
    SpecArgs wf_args;
    std::optional<int> wf_n;
    std::string wf_xs;
    wf_args.attach(wf);
    wf->add_option("--n", wf_n, "quantum number n >= m (default m)");
    wf->add_option("--xs", wf_xs, "grid start:stop:step");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "exact energies, optionally against the numerical oracle");
    SpecArgs sp_args;
    std::optional<int> sp_levels;
    bool sp_oracle = false;
    int sp_points = 4001;
    double sp_tol = 1e-3;
    sp_args.attach(spectrum);
    spectrum->add_option("--levels", sp_levels, "number of levels (default 5; all bound states for hyper)");
    spectrum->add_flag("--oracle", sp_oracle, "compare with the finite-difference oracle");
    spectrum->add_option("--points", sp_points, "oracle grid points (coarse grid)")->check(CLI::Range(101, 2000001));
    spectrum->add_option("--tol", sp_tol, "relative tolerance for the oracle comparison");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::optional<std::string> v_family;
    std::optional<int> v_m;
    std::optional<double> v_a, v_b, v_eps;
    double v_k = 1.0;
    int v_quad = 0;
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suites::suite_names()));
    verify->add_option("--family", v_family, "trig | shifted | hyper")->check(CLI::IsMember({"trig", "shifted", "hyper"}));
    verify->add_option("--m", v_m, "codimension");
    verify->add_option("--a", v_a, "parameter a");
    verify->add_option("--b", v_b, "parameter b");
    verify->add_option("--k", v_k, "inverse length k > 0");
    verify->add_option("--eps", v_eps, "imaginary shift");
    verify->add_option("--quad-order", v_quad, "quadrature order (overrides XMSCARF_QUAD_ORDER)")->check(CLI::Range(10, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Table table;
    bool ok = true;
    try {
        if (*poly) {
            table.command = "poly";
            table.params = {{"n", poly_n}, {"a", poly_a}, {"b", poly_b}};
            if (poly_n < 0) throw UsageError("degree n must be >= 0");
            table.columns = {"x", "P"};
            if (poly_ode) table.columns.push_back("residual");
            const JacobiParam p{poly_a, poly_b, poly_n};
            for (double x : parse_grid(poly_xs)) {
                std::vector<Cell> row{x, jacobi_eval(p, x)};
                if (poly_ode) {
                    const Jet<double> y = jacobi_jet(p, x);
                    row.emplace_back(std::abs((1 - x * x) * y.d2 + (poly_b - poly_a - (poly_a + poly_b + 2) * x) * y.d1 +
                                              poly_n * (poly_n + poly_a + poly_b + 1) * y.value));
                }
                table.rows.push_back(std::move(row));
            }
        } else if (*eop) {
            table.command = "eop";
            const int n = eop_n.value_or(eop_m);
            table.params = {{"n", n}, {"a", eop_a}, {"b", eop_b}, {"m", eop_m}};
            if (eop_m < 0) throw UsageError("m must be >= 0");
            if (n < eop_m) throw UsageError("degree n must satisfy n >= m");
            if (!admissible(eop_a, eop_b, eop_m)) {
                throw UsageError("inadmissible parameters (a, b, m): the weight denominator P_m^(-a-1,b-1) is not sign-definite");
            }
            const EopIndex idx{eop_a, eop_b, eop_m, n};
            table.columns = {"x", "P_hat"};
            if (eop_ode) table.columns.push_back("residual");
            for (double x : parse_grid(eop_xs)) {
                std::vector<Cell> row{x, eop_eval(idx, x)};
                if (eop_ode) row.emplace_back(eop_ode_residual(idx, x));
                table.rows.push_back(std::move(row));
            }
        } else if (*pot) {
            const PotentialSpec spec = pot_args.spec();
            table.command = "potential";
            table.params = pot_args.json();
            table.columns = {"x", "re", "im"};
            for (double x : pot_xs.empty() ? default_xs(spec) : parse_grid(pot_xs)) {
                const Complex v = potential_value(spec, x);
                table.rows.push_back({x, v.real(), v.imag()});
            }
        } else if (*wf) {
            const PotentialSpec spec = wf_args.spec();
            const int n = wf_n.value_or(spec.m);
            table.command = "wavefunction";
            table.params = wf_args.json();
            table.params["n"] = n;
            table.notes.emplace_back("energy", energy(spec, n));
            table.columns = {"x", "re", "im"};
            for (double x : wf_xs.empty() ? default_xs(spec) : parse_grid(wf_xs)) {
                const Complex psi = wavefunction(spec, n, x);
                table.rows.push_back({x, psi.real(), psi.imag()});
            }
        } else if (*spectrum) {
            const PotentialSpec spec = sp_args.spec();
            table.command = "spectrum";
            table.params = sp_args.json();
            int levels = sp_levels.value_or(5);
            if (levels < 1) throw UsageError("--levels must be >= 1");
            if (spec.family == Family::HyperbolicScarf) {
                const int count = hyperbolic_bound_count(spec);
                table.notes.emplace_back("bound_count", static_cast<long long>(count));
                levels = sp_levels ? std::min(levels, count) : count;
            }
            table.columns = {"n", "E_analytic"};
            if (sp_oracle) {
                table.columns.insert(table.columns.end(), {"E_numeric", "rel_error"});
                table.params["oracle_points"] = sp_points;
                table.params["tol"] = sp_tol;
            }
            std::vector<double> numeric;
            if (sp_oracle && levels > 0) {
                if (spec.family == Family::TrigScarf) {
                    numeric = solve_spectrum(spec, trig_grid(spec.k, sp_points), levels, true).eigenvalues;
                } else {
                    // non-Hermitian families: Rayleigh quotient of the analytic eigenfunction
                    for (int j = 0; j < levels; ++j) {
                        const int n = spec.m + j;
                        const GridSpec g = spec.family == Family::HyperbolicScarf
                                               ? symmetric_grid(hyperbolic_truncation(spec, n), 2 * sp_points - 1)
                                               : trig_grid(spec.k, 2 * sp_points - 1);
                        numeric.push_back(check_eigenpair(spec, n, g).rayleigh.real());
                    }
                }
            }
            for (int j = 0; j < levels; ++j) {
                const int n = spec.m + j;
                const double e = energy(spec, n);
                std::vector<Cell> row{static_cast<long long>(n), e};
                if (sp_oracle) {
                    const double r = std::abs(numeric[j] - e) / std::max(std::abs(e), 1e-300);
                    row.emplace_back(numeric[j]);
                    row.emplace_back(r);
                    if (!(r < sp_tol)) ok = false;
                }
                table.rows.push_back(std::move(row));
            }
        } else if (*verify) {
            suites::UserParams up;
            up.m = v_m;
            up.a = v_a;
            up.b = v_b;
            up.k = v_k;
            up.eps = v_eps;
            up.quad_order = v_quad;
            if (v_family) up.family = parse_family(*v_family);
            if (!(v_k > 0.0)) throw UsageError("k must be > 0");
            if (v_a.has_value() != v_b.has_value()) throw UsageError("--a and --b must be given together");
            const VerificationReport report = suites::run(suite, up);
            table.command = "verify";
            table.params = {{"suite", suite}};
            if (v_m) table.params["m"] = *v_m;
            if (v_a) table.params["a"] = *v_a;
            if (v_b) table.params["b"] = *v_b;
            table.params["k"] = v_k;
            table.columns = {"suite", "check", "tolerance", "defect", "pass", "detail"};
            for (const CheckRecord& r : report.records) {
                table.rows.push_back({report.name, r.name, r.tolerance, r.defect, r.pass, r.detail});
            }
            ok = report.passed();
            table.notes.emplace_back("passed", ok);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoSuchBoundState& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SingularPoint& e) {
        err << "error: " << describe_error(e) << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "error: cannot open " << output_path << " for writing\n";
            return 2;
        }
        sink = &file;
    }
    if (format == "json") {
        write_json(table, *sink);
    } else {
        write_csv(table, *sink);
    }
    return ok ? 0 : 1;
}

} // namespace xmscarf::cli
