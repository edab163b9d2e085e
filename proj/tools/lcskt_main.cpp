// Command-line surface: check / parse / hermitian / solve / almost-abelian /
// sweep / reproduce.  Reports are printed as text or, with --json, as a
// single schema-stable JSON object; identical inputs and seed give
// byte-identical JSON.
//
// Exit codes: 0 ok, 2 parse/usage, 3 Jacobi violation, 4 non-integrable J,
// 5 non-positive metric, 10 reproduction mismatch, 11 sweep failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcskt/driver.hpp"
#include "lcskt/scenarios.hpp"
#include "lcskt/sweep.hpp"

using json = nlohmann::ordered_json;
using namespace lcskt;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitJacobi = 3;
constexpr int kExitIntegrability = 4;
constexpr int kExitPositivity = 5;
constexpr int kExitMismatch = 10;
constexpr int kExitSweep = 11;

struct GlobalOptions {
    bool as_json = false;
    std::uint64_t seed = 0;
    std::vector<std::string> params;
    double tolerance = 1e-9;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const GlobalOptions& opts, const json& report, const std::string& text) {
    if (opts.as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

json algebra_block(const LieAlgebra& g) {
    json j;
    j["dim"] = g.dim();
    j["structure"] = print_real_dsl(g);
    return j;
}

int cmd_check(const GlobalOptions& opts, const std::string& file) {
    ParsedInput input = parse_input(slurp(file), parse_param_entries(opts.params));
    LieAlgebra g = input.is_real() ? *input.real : build_from_complex(*input.complex_eqs).algebra;
    ValidationReport v = g.validate();
    if (!v.ok) throw JacobiViolation(v.i, v.j, v.k);
    json report;
    report["command"] = "check";
    report["input"] = algebra_block(g);
    report["jacobi"] = "ok";
    std::optional<int> step = g.nilpotency_step();
    if (step)
        report["step"] = *step;
    else
        report["step"] = nullptr;
    report["lower_central_series"] = g.lower_central_series_dims();
    report["unimodular"] = g.is_unimodular();
    std::ostringstream text;
    text << "structure    " << print_real_dsl(g) << "\n";
    text << "jacobi       ok\n";
    text << "step         " << (step ? std::to_string(*step) : std::string("not nilpotent")) << "\n";
    text << "unimodular   " << (g.is_unimodular() ? "yes" : "no") << "\n";
    emit(opts, report, text.str());
    return 0;
}

int cmd_parse(const GlobalOptions& opts, const std::string& file) {
    ParsedInput input = parse_input(slurp(file), parse_param_entries(opts.params));
    json report;
    report["command"] = "parse";
    std::ostringstream text;
    if (input.is_real()) {
        report["kind"] = "real";
        report["canonical"] = print_real_dsl(*input.real);
        text << print_real_dsl(*input.real) << "\n";
    } else {
        report["kind"] = "complex";
        report["canonical"] = print_complex_dsl(*input.complex_eqs);
        report["realified"] = print_real_dsl(build_from_complex(*input.complex_eqs).algebra);
        text << print_complex_dsl(*input.complex_eqs) << "\n";
    }
    emit(opts, report, text.str());
    return 0;
}

json hermitian_block(const HermitianStructure& h) {
    json j;
    j["fundamental_form"] = h.fundamental_form().str();
    j["torsion"] = h.torsion().str();
    j["dH"] = h.torsion_derivative().str();
    j["lee_form"] = h.lee_form().str();
    MetricFlags f = h.classify();
    j["flags"] = {{"kahler", f.kahler},
                  {"skt", f.skt},
                  {"balanced", f.balanced},
                  {"lcb", f.lcb},
                  {"lck", f.lck}};
    return j;
}

int cmd_hermitian(const GlobalOptions& opts, const std::string& file, const std::string& j_spec,
                  const MetricSpec& metric_spec) {
    BuiltInput in = build_input(slurp(file), parse_param_entries(opts.params), j_spec, metric_spec);
    HermitianStructure h(in.algebra, in.J, in.metric);
    json report;
    report["command"] = "hermitian";
    report["input"] = algebra_block(in.algebra);
    report["hermitian"] = hermitian_block(h);
    MetricFlags f = h.classify();
    std::ostringstream text;
    text << "Omega   " << h.fundamental_form().str() << "\n";
    text << "H       " << h.torsion().str() << "\n";
    text << "dH      " << h.torsion_derivative().str() << "\n";
    text << "theta   " << h.lee_form().str() << "\n";
    text << "flags   kahler=" << f.kahler << " skt=" << f.skt << " balanced=" << f.balanced
         << " lcb=" << f.lcb << " lck=" << f.lck << "\n";
    emit(opts, report, text.str());
    return 0;
}

json solution_block(const LcsktSolution& sol) {
    json j;
    j["classification"] = to_string(sol.classification);
    j["solution_dim"] = sol.dimension();
    if (sol.particular)
        j["particular"] = sol.particular->str();
    else
        j["particular"] = nullptr;
    json basis = json::array();
    for (const auto& b : sol.homogeneous_basis) basis.push_back(b.str());
    j["homogeneous_basis"] = basis;
    j["skt_but_not_lcskt"] = sol.skt_but_not_lcskt;
    return j;
}

int cmd_solve(const GlobalOptions& opts, const std::string& file, const std::string& j_spec,
              const MetricSpec& metric_spec) {
    BuiltInput in = build_input(slurp(file), parse_param_entries(opts.params), j_spec, metric_spec);
    HermitianStructure h(in.algebra, in.J, in.metric);
    LcsktSolution sol = h.lcskt_solve();
    json report;
    report["command"] = "solve";
    report["input"] = algebra_block(in.algebra);
    report["torsion"] = h.torsion().str();
    report["dH"] = h.torsion_derivative().str();
    report["solution"] = solution_block(sol);
    std::ostringstream text;
    text << "H               " << h.torsion().str() << "\n";
    text << "dH              " << h.torsion_derivative().str() << "\n";
    text << "classification  " << to_string(sol.classification) << "\n";
    if (sol.skt_but_not_lcskt) text << "note            pluriclosed, but no admissible closed 1-form\n";
    text << "solution dim    " << sol.dimension() << "\n";
    if (sol.particular && !sol.particular->is_zero())
        text << "alpha           " << sol.particular->str() << "\n";
    for (const auto& b : sol.homogeneous_basis) text << "basis           " << b.str() << "\n";
    emit(opts, report, text.str());
    return 0;
}

Mat<Rat> parse_rows(const std::string& spec, int expected) {
    Mat<Rat> m(expected, expected);
    std::stringstream rows(spec);
    std::string row;
    int i = 0;
    while (std::getline(rows, row, ';')) {
        if (i >= expected) throw InvalidParams("too many matrix rows");
        std::stringstream cols(row);
        std::string entry;
        int j = 0;
        while (std::getline(cols, entry, ',')) {
            if (j >= expected) throw InvalidParams("too many matrix columns");
            auto value = parse_rational(entry);
            if (!value) throw InvalidParams("bad matrix entry: " + entry);
            m(i, j) = *value;
            ++j;
        }
        if (j != expected) throw InvalidParams("matrix row needs " + std::to_string(expected) + " entries");
        ++i;
    }
    if (i != expected) throw InvalidParams("matrix needs " + std::to_string(expected) + " rows");
    return m;
}

int cmd_almost_abelian(const GlobalOptions& opts, int n, const std::string& a_str,
                       const std::string& v_str, const std::string& A_str, const std::string& J1_str,
                       const std::string& catalog_name, double lattice_t0, bool run_lattice) {
    AlmostAbelianData d;
    if (!catalog_name.empty()) {
        CatalogEntry entry = catalog_get(catalog_name, parse_param_entries(opts.params));
        if (!entry.adapted) throw InvalidParams(catalog_name + " has no adapted presentation");
        d = *entry.adapted;
    } else {
        d.n = n;
        auto a = parse_rational(a_str);
        if (!a) throw InvalidParams("--a expects a rational");
        d.a = *a;
        d.v.assign(d.n1(), Rat(0));
        if (!v_str.empty()) {
            std::stringstream ss(v_str);
            std::string entry;
            int i = 0;
            while (std::getline(ss, entry, ',')) {
                if (i >= d.n1()) throw InvalidParams("--v has too many entries");
                auto value = parse_rational(entry);
                if (!value) throw InvalidParams("bad entry in --v: " + entry);
                d.v[i++] = *value;
            }
        }
        d.A = A_str.empty() ? Mat<Rat>(d.n1(), d.n1()) : parse_rows(A_str, d.n1());
        d.J1 = (J1_str.empty() || J1_str == "standard") ? AlmostAbelianData::standard_J1(d.n1())
                                                        : parse_rows(J1_str, d.n1());
    }
    BuiltAlmostAbelian built = build_almost_abelian(d);
    json report;
    report["command"] = "almost-abelian";
    report["input"] = algebra_block(built.algebra);
    report["hermitian"] = hermitian_block(built.hermitian);
    report["lee_form_trace_formula"] = lee_form_trace_formula(d).str();
    RicciForms rf = ricci_forms(d);
    report["ricci"] = {{"chern", rf.chern.str()}, {"bismut", rf.bismut.str()}};
    report["skt_certificate"] = skt_check(d);
    LcsktSolution sol = built.hermitian.lcskt_solve();
    report["solution"] = solution_block(sol);
    std::ostringstream text;
    text << "structure       " << print_real_dsl(built.algebra) << "\n";
    text << "H               " << built.hermitian.torsion().str() << "\n";
    text << "dH              " << built.hermitian.torsion_derivative().str() << "\n";
    text << "theta (coframe) " << built.hermitian.lee_form().str() << "\n";
    text << "theta (formula) " << lee_form_trace_formula(d).str() << "\n";
    text << "rho^C           " << rf.chern.str() << "\n";
    text << "rho^B           " << rf.bismut.str() << "\n";
    text << "classification  " << to_string(sol.classification) << "\n";
    if (!is_zero(d.A.det())) {
        NondegenerateDecision dec = lcskt_decide_nondegenerate(d);
        json decision;
        decision["lcskt"] = dec.lcskt;
        decision["lambda_kind"] = dec.lambda_kind == NondegenerateDecision::LambdaKind::NONE ? "none"
                                  : dec.lambda_kind == NondegenerateDecision::LambdaKind::UNIQUE
                                      ? "unique"
                                      : "all";
        decision["lambda"] = to_string(dec.lambda);
        decision["normal"] = dec.normal;
        decision["trivial"] = dec.trivial;
        report["nondegenerate_decision"] = decision;
        EigenDiagnostic diag = eigen_diagnostic(d, opts.tolerance);
        json eigen = json::array();
        for (size_t i = 0; i < diag.eigenvalues.size(); ++i)
            eigen.push_back({{"re", diag.eigenvalues[i].real()},
                             {"im", diag.eigenvalues[i].imag()},
                             {"bin", diag.bin[i]}});
        report["eigenvalue_diagnostic"] = eigen;
        text << "decision        " << (dec.lcskt ? "LCSKT" : "no solution") << " (lambda "
             << to_string(dec.lambda) << ")\n";
    } else {
        report["nondegenerate_decision"] = nullptr;
        text << "decision        generic solver (det A = 0)\n";
    }
    if (run_lattice) {
        LatticeScreen screen = lattice_screen(d, lattice_t0, opts.tolerance);
        json lattice;
        lattice["t0"] = screen.t0;
        lattice["char_poly"] = screen.char_poly;
        lattice["all_integral"] = screen.all_integral;
        report["lattice_screen"] = lattice;
        text << "lattice screen  t0=" << screen.t0
             << (screen.all_integral ? " integral" : " non-integral") << "\n";
    }
    emit(opts, report, text.str());
    return 0;
}

int cmd_sweep(const GlobalOptions& opts, const std::string& family, int draws) {
    SweepResult result = run_sweep(family, draws, opts.seed);
    json report;
    report["command"] = "sweep";
    report["family"] = result.family;
    report["seed"] = result.seed;
    report["draws"] = result.draws;
    report["passes"] = result.passes;
    report["failures"] = result.failures;
    std::ostringstream text;
    text << family << ": " << result.passes << "/" << result.draws << " identities hold (seed "
         << opts.seed << ")\n";
    for (const std::string& f : result.failures) text << "  reproducer: " << f << "\n";
    emit(opts, report, text.str());
    return result.ok() ? 0 : kExitSweep;
}

int cmd_reproduce(const GlobalOptions& opts, const std::vector<std::string>& ids, bool all) {
    std::vector<ScenarioResult> results;
    if (all) {
        results = run_all_scenarios();
    } else {
        if (ids.empty()) throw InvalidParams("reproduce needs scenario ids or --all");
        for (const std::string& id : ids) results.push_back(run_scenario(id));
    }
    json report;
    report["command"] = "reproduce";
    json table = json::array();
    int mismatches = 0;
    std::ostringstream text;
    for (const ScenarioResult& r : results) {
        table.push_back({{"id", r.id},
                         {"description", r.description},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"match", r.match}});
        if (!r.match) ++mismatches;
        text << (r.match ? "PASS  " : "FAIL  ") << r.id << "\n";
        if (!r.match) text << "      expected: " << r.expected << "\n      computed: " << r.computed << "\n";
    }
    report["results"] = table;
    report["mismatches"] = mismatches;
    emit(opts, report, text.str());
    return mismatches == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hermitian geometry on low-dimensional Lie algebras"};
    app.require_subcommand(1);
    GlobalOptions opts;
    app.add_flag("--json", opts.as_json, "emit a JSON report on stdout");
    app.add_option("--seed", opts.seed, "seed for randomized commands")->default_val(0);
    app.add_option("--param", opts.params, "bind a parameter, NAME=RAT or NAME=(re,im)");
    app.add_option("--tolerance", opts.tolerance, "float tolerance for the lattice screen")
        ->default_val(1e-9);

    std::string file, j_spec, metric_text = "identity";
    auto add_input = [&](CLI::App* cmd, bool with_metric) {
        cmd->add_option("file", file, "input file ('-' for stdin)")->required();
        if (with_metric) {
            cmd->add_option("--J", j_spec, "'standard' or pairs:a>b,... (real inputs)");
            cmd->add_option("--metric", metric_text, "identity | diag:... | params:r=..,...");
        }
    };

    CLI::App* check = app.add_subcommand("check", "Jacobi, nilpotency step, unimodularity")->fallthrough();
    add_input(check, false);
    CLI::App* parse = app.add_subcommand("parse", "parse and print the canonical form")->fallthrough();
    add_input(parse, false);
    CLI::App* hermitian = app.add_subcommand("hermitian", "fundamental form, torsion, Lee form, flags")->fallthrough();
    add_input(hermitian, true);
    CLI::App* solve = app.add_subcommand("solve", "solve d H = alpha ^ H over closed 1-forms")->fallthrough();
    add_input(solve, true);

    CLI::App* aa = app.add_subcommand("almost-abelian", "adapted-basis analysis from (a, v, A, J1)")->fallthrough();
    int aa_n = 3;
    std::string aa_a = "0", aa_v, aa_A, aa_J1, aa_catalog, aa_t0_text;
    aa->add_option("--n", aa_n, "half-dimension")->default_val(3);
    aa->add_option("--a", aa_a, "bracket coefficient a");
    aa->add_option("--v", aa_v, "comma-separated vector in the ideal");
    aa->add_option("--A", aa_A, "rows 'a,b,..;c,d,..' acting on the ideal");
    aa->add_option("--J1", aa_J1, "'standard' or rows like --A");
    aa->add_option("--catalog", aa_catalog, "use a catalog entry (l8, l23_0)");
    CLI::Option* lattice_opt =
        aa->add_option("--lattice", aa_t0_text,
                       "run the lattice screen at t0 (a decimal or 2pi, pi, pi/2, pi/3)");

    CLI::App* sweep = app.add_subcommand("sweep", "randomized identity sweeps")->fallthrough();
    std::string sweep_family;
    int sweep_draws = 100;
    sweep->add_option("--family", sweep_family, "nonnil | nil-e0 | nil-e1 | almost-abelian")
        ->required();
    sweep->add_option("--draws", sweep_draws, "number of draws")->default_val(100);

    CLI::App* reproduce = app.add_subcommand("reproduce", "recompute pinned closed-form values")->fallthrough();
    std::vector<std::string> repro_ids;
    bool repro_all = false;
    reproduce->add_option("ids", repro_ids, "scenario ids");
    reproduce->add_flag("--all", repro_all, "run every registered scenario");
    CLI::App* repro_list = reproduce->add_subcommand("list", "list scenario ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(opts, file);
        if (*parse) return cmd_parse(opts, file);
        if (*hermitian) return cmd_hermitian(opts, file, j_spec, MetricSpec{metric_text});
        if (*solve) return cmd_solve(opts, file, j_spec, MetricSpec{metric_text});
        if (*aa) {
            bool run_lattice = lattice_opt->count() > 0;
            double t0 = 0.0;
            if (run_lattice) {
                const double pi = std::acos(-1.0);
                if (aa_t0_text == "2pi")
                    t0 = 2 * pi;
                else if (aa_t0_text == "pi")
                    t0 = pi;
                else if (aa_t0_text == "pi/2")
                    t0 = pi / 2;
                else if (aa_t0_text == "pi/3")
                    t0 = pi / 3;
                else
                    t0 = std::stod(aa_t0_text);
            }
            return cmd_almost_abelian(opts, aa_n, aa_a, aa_v, aa_A, aa_J1, aa_catalog, t0, run_lattice);
        }
        if (*sweep) return cmd_sweep(opts, sweep_family, sweep_draws);
        if (*reproduce) {
            if (*repro_list) {
                for (const std::string& id : scenario_ids()) std::cout << id << "\n";
                return 0;
            }
            return cmd_reproduce(opts, repro_ids, repro_all);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnboundParam& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const JacobiViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitJacobi;
    } catch (const NonIntegrable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrability;
    } catch (const NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPositivity;
    } catch (const NotCompatible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPositivity;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
