#include "qclab/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qclab/diagnostics.hpp"
#include "qclab/expr.hpp"
#include "qclab/solver.hpp"

namespace qclab {

const char* kVersion = "0.1.0";

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, std::vector<std::string>> kSchema = {
    {"domain", {"kind", "r0", "cos", "sin"}},
    {"surface", {"kind", "param"}},
    {"boundary", {"expr"}},
    {"solver", {"kind", "tol", "relaxation", "max_outer"}},
    {"elliptic", {"alpha", "beta", "gamma", "a1", "b1", "c1", "a", "b", "c", "d"}},
    {"grid", {"n"}},
    {"diagnostics",
     {"run", "collar_count", "collar_delta0", "poisson_sweep_max", "poisson_sweep_steps", "pdi_m",
      "pdi_n", "random_count"}},
    {"output", {"dir"}},
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& v, const std::string& what) {
    try {
        size_t end = 0;
        double x = std::stod(v, &end);
        if (end != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: bad number for " + what + ": '" + v + "'");
    }
}

int to_int(const std::string& v, const std::string& what) {
    try {
        size_t end = 0;
        int x = std::stoi(v, &end);
        if (end != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: bad integer for " + what + ": '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// "k:v, k:v" harmonic coefficient list
std::vector<std::pair<int, double>> parse_coeffs(const std::string& v, const std::string& what) {
    std::vector<std::pair<int, double>> out;
    for (const std::string& item : split_list(v)) {
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw config_error("config: expected k:value in " + what + ", got '" + item + "'");
        out.emplace_back(to_int(trim(item.substr(0, colon)), what),
                         to_double(trim(item.substr(colon + 1)), what));
    }
    return out;
}

}  // namespace

Scenario Scenario::parse_text(const std::string& text) {
    Scenario s;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("config: bad section header at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (!kSchema.count(section))
                throw config_error("config: unknown section [" + section + "]");
            s.sections[section];
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config: expected key = value at line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            if (key != "name") throw config_error("config: unknown top-level key '" + key + "'");
            s.name = value;
            continue;
        }
        const auto& allowed = kSchema.at(section);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw config_error("config: unknown key '" + key + "' in section [" + section + "]");
        if (s.sections[section].count(key))
            throw config_error("config: duplicate key '" + key + "' in [" + section + "]");
        s.sections[section][key] = value;
    }
    if (s.name.empty()) throw config_error("config: missing scenario name");
    return s;
}

Scenario Scenario::parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("config: cannot read " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_text(ss.str());
}

std::string Scenario::to_config_text() const {
    std::ostringstream os;
    os << "name = " << name << "\n";
    for (const auto& [section, kv] : sections) {
        os << "[" << section << "]\n";
        for (const auto& [k, v] : kv) os << k << " = " << v << "\n";
    }
    return os.str();
}

std::string Scenario::get(const std::string& section, const std::string& key,
                          const std::string& fallback) const {
    auto sit = sections.find(section);
    if (sit == sections.end()) return fallback;
    auto kit = sit->second.find(key);
    return kit == sit->second.end() ? fallback : kit->second;
}

bool Scenario::has(const std::string& section, const std::string& key) const {
    auto sit = sections.find(section);
    return sit != sections.end() && sit->second.count(key) > 0;
}

namespace {

struct ResolvedScenario {
    PlanarDomain dom;
    bool needs_transplant = false;
    std::string surface_kind;
    double surface_param = 1.0;
    Expression boundary;
    std::string solver_kind;
    double tol;
    double relaxation;
    int max_outer;
    int n;
    std::vector<std::string> diagnostics;
    EllipticCoeffs elliptic;
};

SurfacePatch resolve_patch(const std::string& kind, double param) {
    if (kind == "flat") return patch_flat();
    if (kind == "flat_scaled") return patch_flat_scaled(param);
    if (kind == "sphere_cap") return patch_sphere_cap(param);
    if (kind == "cylinder") return patch_cylinder(param);
    if (kind == "catenoid") return patch_catenoid();
    if (kind == "enneper") return patch_enneper();
    if (kind == "paraboloid_graph") return patch_paraboloid();
    throw config_error("config: unknown surface '" + kind + "'");
}

CoeffFn expr_coeff(const std::string& src) {
    if (trim(src).empty() || trim(src) == "0") return coeff_zero();
    Expression e = Expression::parse(src, {"x", "y"});
    return [e](cpx z, cpx) { return e.eval({{"x", cpx(z.real(), 0.0)}, {"y", cpx(z.imag(), 0.0)}}); };
}

ResolvedScenario resolve(const Scenario& s, const RunOptions& opt) {
    ResolvedScenario r;

    std::string dkind = s.get("domain", "kind", "disk");
    if (dkind == "disk") {
        r.dom = domain_circle(1.0);
    } else if (dkind == "polar") {
        PolarSpec spec;
        spec.r0 = to_double(s.get("domain", "r0", "1.0"), "domain.r0");
        spec.cos_coeffs = parse_coeffs(s.get("domain", "cos", ""), "domain.cos");
        spec.sin_coeffs = parse_coeffs(s.get("domain", "sin", ""), "domain.sin");
        r.dom = domain_polar(spec);
        r.needs_transplant = !r.dom.is_unit_circle;
    } else {
        throw config_error("config: unknown domain kind '" + dkind + "'");
    }

    r.surface_kind = s.get("surface", "kind", "constant");
    r.surface_param = to_double(s.get("surface", "param", "1.0"), "surface.param");
    if (r.surface_kind != "constant") resolve_patch(r.surface_kind, r.surface_param);

    std::string expr = s.get("boundary", "expr", "");
    if (expr.empty()) throw config_error("config: missing boundary.expr");
    r.boundary = Expression::parse(expr, {"theta"});

    r.solver_kind = s.get("solver", "kind", "laplace");
    if (r.solver_kind != "laplace" && r.solver_kind != "rho_harmonic" &&
        r.solver_kind != "general_elliptic")
        throw config_error("config: unknown solver '" + r.solver_kind + "'");
    double default_tol = r.solver_kind == "laplace" ? 1e-10 : 1e-8;
    r.tol = to_double(s.get("solver", "tol", std::to_string(default_tol)), "solver.tol");
    if (r.tol <= 0.0) throw config_error("config: solver.tol must be positive");
    r.relaxation = to_double(s.get("solver", "relaxation", "0.5"), "solver.relaxation");
    r.max_outer = to_int(s.get("solver", "max_outer", "500"), "solver.max_outer");

    if (r.solver_kind == "general_elliptic") {
        r.elliptic.alpha = to_double(s.get("elliptic", "alpha", "1.0"), "elliptic.alpha");
        r.elliptic.beta = to_double(s.get("elliptic", "beta", "0.0"), "elliptic.beta");
        r.elliptic.gamma = to_double(s.get("elliptic", "gamma", "1.0"), "elliptic.gamma");
        r.elliptic.a1 = expr_coeff(s.get("elliptic", "a1", "0"));
        r.elliptic.b1 = expr_coeff(s.get("elliptic", "b1", "0"));
        r.elliptic.c1 = expr_coeff(s.get("elliptic", "c1", "0"));
        r.elliptic.a = expr_coeff(s.get("elliptic", "a", "0"));
        r.elliptic.b = expr_coeff(s.get("elliptic", "b", "0"));
        r.elliptic.c = expr_coeff(s.get("elliptic", "c", "0"));
        r.elliptic.d = expr_coeff(s.get("elliptic", "d", "0"));
        r.elliptic.validate();
    }

    r.n = opt.grid_override > 0 ? opt.grid_override
                                : to_int(s.get("grid", "n", "129"), "grid.n");
    if (r.n < 33) throw config_error("config: grid.n must be >= 33");

    r.diagnostics = split_list(s.get("diagnostics", "run", ""));
    const std::vector<std::string> known = {"beltrami",       "fit_poisson",
                                            "component_inequality", "gradient_chain",
                                            "collar",         "bilipschitz",
                                            "lemma_suite_random"};
    for (const std::string& d : r.diagnostics) {
        if (std::find(known.begin(), known.end(), d) == known.end())
            throw config_error("config: unknown diagnostic '" + d + "'");
        if (std::count(r.diagnostics.begin(), r.diagnostics.end(), d) != 1)
            throw config_error("config: diagnostic '" + d + "' requested more than once");
    }
    return r;
}

json scenario_echo(const Scenario& s) {
    json echo;
    echo["name"] = s.name;
    for (const auto& [section, kv] : s.sections) {
        json sec;
        for (const auto& [k, v] : kv) sec[k] = v;
        echo[section] = sec;
    }
    return echo;
}

json collar_json(const CollarProfile& cp) {
    json j;
    json table = json::array();
    for (const auto& [delta, sup] : cp.collars) table.push_back({{"delta", delta}, {"sup_grad", sup}});
    j["collars"] = table;
    j["lipschitz_estimate"] = cp.lipschitz_estimate;
    j["verdict"] = cp.plateau ? "plateau" : "growth";
    j["exponent"] = cp.exponent;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw numeric_error("cannot write " + path);
    os << text;
}

}  // namespace

RunResult run_scenario(const Scenario& s, const RunOptions& opt) {
    auto t_start = std::chrono::steady_clock::now();
    RunResult rr;

    // resolve and validate everything before producing any output
    ResolvedScenario r = resolve(s, opt);

    json report;
    report["name"] = s.name;
    report["scenario"] = scenario_echo(s);
    report["provenance"] = {{"version", kVersion}, {"seed", opt.seed}};

    GridPtr grid;
    BoundaryFn data;
    Expression bexpr = r.boundary;
    BoundaryFn raw_data = [bexpr](double t) { return bexpr.eval({{"theta", cpx(t, 0.0)}}); };

    if (r.needs_transplant) {
        // solve on the disk through the Theodorsen correspondence
        TheodorsenResult th = theodorsen_map(r.dom.polar, 256);
        report["conformal_map"] = {{"source", th.map.source},
                                   {"sweeps", th.sweeps},
                                   {"residual", th.residual},
                                   {"boundary_misfit", th.boundary_misfit},
                                   {"epsilon", th.epsilon}};
        grid = make_grid(domain_circle(1.0), r.n);
        data = transplant_boundary(th.map, raw_data);
    } else {
        grid = make_grid(r.dom, r.n);
        data = raw_data;
    }

    ConformalFactor rho = r.surface_kind == "constant"
                              ? constant_factor(r.surface_param)
                              : conformal_factor(resolve_patch(r.surface_kind, r.surface_param), *grid);
    report["surface"] = {{"kind", r.surface_kind}, {"param", r.surface_param}};

    ComplexField solution;
    GridPtr diag_grid = grid;
    try {
        if (r.solver_kind == "laplace") {
            SorStats st;
            SorOptions so;
            so.tol = r.tol;
            solution = solve_laplace_dirichlet(grid, data, &st, so);
            report["solver"] = {{"kind", "laplace"},
                                {"tol", r.tol},
                                {"sweeps", st.sweeps},
                                {"residual", st.residual},
                                {"converged", st.converged}};
        } else if (r.solver_kind == "rho_harmonic") {
            PicardStats st;
            PicardOptions po;
            po.tol = r.tol;
            po.relax = r.relaxation;
            po.max_outer = r.max_outer;
            solution = solve_rho_harmonic(rho, data, grid, &st, po);
            report["solver"] = {{"kind", "rho_harmonic"},
                                {"tol", r.tol},
                                {"relaxation", r.relaxation},
                                {"outer", st.outer},
                                {"residual", st.residual},
                                {"relax_final", st.relax_final},
                                {"converged", st.converged}};
        } else {
            PicardOptions po;
            po.tol = r.tol;
            po.relax = r.relaxation;
            po.max_outer = r.max_outer;
            GeneralEllipticResult ge = solve_general_elliptic(r.elliptic, r.dom, data, r.n, po);
            solution = ge.field;
            diag_grid = ge.grid;
            report["solver"] = {{"kind", "general_elliptic"},
                                {"tol", r.tol},
                                {"outer", ge.stats.outer},
                                {"residual", ge.stats.residual},
                                {"converged", ge.stats.converged},
                                {"reduction",
                                 {{"t11", ge.reduced.substitution.m11},
                                  {"t12", ge.reduced.substitution.m12},
                                  {"t22", ge.reduced.substitution.m22},
                                  {"M", ge.reduced.M},
                                  {"N", ge.reduced.N},
                                  {"sup_w", ge.reduced.sup_w}}}};
        }
    } catch (const solver_error& e) {
        report["solver"] = {{"kind", r.solver_kind}, {"failed", true}, {"error", e.what()}};
        report["grid"] = {{"n", r.n}};
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t_start)
                      .count();
        report["timing"] = {{"total_ms", ms}};
        rr.ok = false;
        rr.failure = e.what();
        rr.report_json = report.dump(2) + "\n";
        if (opt.write_outputs) {
            std::filesystem::create_directories(opt.out_dir);
            write_text(opt.out_dir + "/" + s.name + ".report.json", rr.report_json);
        }
        return rr;
    }

    report["grid"] = {{"n", diag_grid->n()},
                      {"h", diag_grid->h()},
                      {"interior_nodes", diag_grid->interior_count()},
                      {"boundary_nodes", diag_grid->boundary_count()}};

    json diags;
    std::optional<CollarProfile> collar_for_csv;
    std::optional<BeltramiField> mu_for_csv;
    for (const std::string& d : r.diagnostics) {
        if (d == "beltrami") {
            BeltramiField b = beltrami(solution);
            diags["beltrami"] = {{"k", b.k},
                                 {"degenerate_count", b.degenerate_count},
                                 {"floor", b.floor},
                                 {"qc_verdict", b.qc_verdict()}};
            mu_for_csv = std::move(b);
        } else if (d == "fit_poisson") {
            double mmax = to_double(s.get("diagnostics", "poisson_sweep_max", "2.0"),
                                    "diagnostics.poisson_sweep_max");
            int steps = to_int(s.get("diagnostics", "poisson_sweep_steps", "41"),
                               "diagnostics.poisson_sweep_steps");
            if (steps < 2) throw config_error("config: poisson_sweep_steps must be >= 2");
            std::vector<double> sweep(steps);
            for (int i = 0; i < steps; ++i) sweep[i] = mmax * i / (steps - 1);
            PoissonFit fit = fit_poisson_constants(solution, sweep);
            json curve = json::array();
            for (const auto& [M, N] : fit.curve) curve.push_back({{"M", M}, {"N", N}});
            diags["fit_poisson"] = {{"curve", curve},
                                    {"chosen_M", fit.chosen_M},
                                    {"chosen_N", fit.chosen_N},
                                    {"scale", fit.scale},
                                    {"residual_ok", fit.residual_ok}};
        } else if (d == "component_inequality") {
            double M = to_double(s.get("diagnostics", "pdi_m", "1.0"), "diagnostics.pdi_m");
            double N = to_double(s.get("diagnostics", "pdi_n", "0.0"), "diagnostics.pdi_n");
            ComponentInequalityReport rep = check_component_inequality(solution, M, N);
            diags["component_inequality"] = {{"k", rep.k},
                                             {"max_identity_dev", rep.max_identity_dev},
                                             {"max_sandwich_violation", rep.max_sandwich_violation},
                                             {"max_pdi_violation", rep.max_pdi_violation},
                                             {"nodes_checked", rep.nodes_checked},
                                             {"nodes_excluded", rep.nodes_excluded}};
        } else if (d == "gradient_chain") {
            GradientChainReport rep = verify_gradient_chain(solution);
            diags["gradient_chain"] = {{"k", rep.k},
                                       {"b_t", rep.b_t},
                                       {"max_left_violation", rep.max_left_violation},
                                       {"left_slack", rep.left_slack},
                                       {"global_lhs", rep.global_lhs},
                                       {"global_rhs", rep.global_rhs},
                                       {"global_ok", rep.global_ok}};
        } else if (d == "collar") {
            int count = to_int(s.get("diagnostics", "collar_count", "5"),
                               "diagnostics.collar_count");
            double d0 = to_double(s.get("diagnostics", "collar_delta0", "0.25"),
                                  "diagnostics.collar_delta0");
            CollarProfile cp = collar_profile(solution, count, d0);
            diags["collar"] = collar_json(cp);
            collar_for_csv = std::move(cp);
        } else if (d == "bilipschitz") {
            int count = to_int(s.get("diagnostics", "collar_count", "5"),
                               "diagnostics.collar_count");
            double d0 = to_double(s.get("diagnostics", "collar_delta0", "0.25"),
                                  "diagnostics.collar_delta0");
            BilipschitzProbe bp = bilipschitz_probe(solution, count, d0);
            json table = json::array();
            for (const auto& [delta, inf] : bp.collars)
                table.push_back({{"delta", delta}, {"inf_distortion", inf}});
            diags["bilipschitz"] = {{"collars", table},
                                    {"overall_inf", bp.overall_inf},
                                    {"positive_floor", bp.positive_floor}};
        } else if (d == "lemma_suite_random") {
            int count = to_int(s.get("diagnostics", "random_count", "50"),
                               "diagnostics.random_count");
            std::mt19937_64 rng(opt.seed);
            std::uniform_real_distribution<double> mag(0.0, 0.8), ang(0.0, 2.0 * M_PI);
            double max_dev = 0.0, max_violation = 0.0;
            for (int trial = 0; trial < count; ++trial) {
                cpx nu = std::polar(mag(rng), ang(rng));
                ComplexField af =
                    ComplexField::sample(diag_grid, [nu](cpx z) { return z + nu * std::conj(z); });
                ComponentInequalityReport rep = check_component_inequality(af, 1.0, 0.0);
                max_dev = std::max(max_dev, rep.max_identity_dev);
                max_violation = std::max(max_violation, rep.max_sandwich_violation);
            }
            diags["lemma_suite_random"] = {{"count", count},
                                           {"max_identity_dev", max_dev},
                                           {"max_sandwich_violation", max_violation}};
        }
    }
    report["diagnostics"] = diags;

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t_start)
                  .count();
    report["timing"] = {{"total_ms", ms}};

    rr.ok = true;
    rr.report_json = report.dump(2) + "\n";
    if (opt.write_outputs) {
        std::filesystem::create_directories(opt.out_dir);
        write_text(opt.out_dir + "/" + s.name + ".report.json", rr.report_json);
        write_csv(solution, opt.out_dir + "/" + s.name + ".solution.csv");
        if (mu_for_csv) write_csv(mu_for_csv->mu, opt.out_dir + "/" + s.name + ".mu.csv");
        if (collar_for_csv) {
            std::ostringstream os;
            os << "delta,sup_grad\n";
            char buf[64];
            for (const auto& [delta, sup] : collar_for_csv->collars) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", delta, sup);
                os << buf;
            }
            write_text(opt.out_dir + "/" + s.name + ".collar.csv", os.str());
        }
    }
    return rr;
}

std::vector<std::string> list_catalog(const std::string& filter) {
    static const std::vector<std::pair<std::string, std::string>> entries = {
        {"boundary-fn abs", "complex modulus"},
        {"boundary-fn arg", "principal argument"},
        {"boundary-fn conj", "complex conjugate"},
        {"boundary-fn cos", "cosine"},
        {"boundary-fn exp", "complex exponential"},
        {"boundary-fn im", "imaginary part"},
        {"boundary-fn log", "principal logarithm"},
        {"boundary-fn re", "real part"},
        {"boundary-fn sin", "sine"},
        {"boundary-fn sqrt", "principal square root"},
        {"boundary-fn tan", "tangent"},
        {"diagnostic beltrami", "dilatation field and QC verdict"},
        {"diagnostic bilipschitz", "lower distortion bound per collar"},
        {"diagnostic collar", "boundary collar gradient profile"},
        {"diagnostic component_inequality", "component ratio identity and sandwich"},
        {"diagnostic fit_poisson", "minimal (M, N) Poisson-inequality constants"},
        {"diagnostic gradient_chain", "gradient bound chain slack"},
        {"diagnostic lemma_suite_random", "randomized affine sandwich suite"},
        {"domain disk", "unit circle"},
        {"domain polar", "star-shaped r(theta) from harmonic coefficients"},
        {"map identity", "z"},
        {"map mobius", "disk automorphism (a, theta)"},
        {"map power", "z^k"},
        {"map theodorsen", "computed map onto a star-shaped domain"},
        {"solver general_elliptic", "principal-part reduction + damped Picard"},
        {"solver laplace", "red-black SOR with boundary-cut stencils"},
        {"solver rho_harmonic", "damped Picard for the weighted-energy equation"},
        {"surface catenoid", "catenoid patch, rho = cosh^2 v"},
        {"surface constant", "flat factor rho = const"},
        {"surface cylinder", "cylinder patch, rho = 1"},
        {"surface enneper", "Enneper patch, rho = (1+|w|^2)^2"},
        {"surface flat", "plane patch, rho = 1"},
        {"surface flat_scaled", "scaled plane patch, rho = s^2"},
        {"surface paraboloid_graph", "graph patch (not isothermal)"},
        {"surface sphere_cap", "stereographic sphere patch, rho = 4/(1+|w|^2)^2"},
    };
    std::vector<std::string> out;
    for (const auto& [name, desc] : entries) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        out.push_back(name + " - " + desc);
    }
    return out;
}

SuiteResult run_suite(const std::string& dir, const RunOptions& opt) {
    SuiteResult sr;
    std::vector<std::string> files;
    if (std::filesystem::exists(dir))
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".scn")
                files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    for (const std::string& file : files) {
        SuiteEntry e;
        e.file = file;
        try {
            Scenario s = Scenario::parse_file(file);
            e.name = s.name;
            RunResult rr = run_scenario(s, opt);
            e.ok = rr.ok;
            e.detail = rr.ok ? "ok" : rr.failure;
        } catch (const std::exception& ex) {
            e.ok = false;
            e.detail = ex.what();
        }
        sr.entries.push_back(std::move(e));
    }

    if (opt.write_outputs) {
        json j;
        json table = json::array();
        for (const auto& e : sr.entries)
            table.push_back(
                {{"file", e.file}, {"name", e.name}, {"ok", e.ok}, {"detail", e.detail}});
        j["suite"] = table;
        j["all_ok"] = sr.all_ok();
        std::filesystem::create_directories(opt.out_dir);
        write_text(opt.out_dir + "/suite.report.json", j.dump(2) + "\n");
    }
    return sr;
}

}  // namespace qclab
