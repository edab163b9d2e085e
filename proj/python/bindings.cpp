#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcskt/driver.hpp"
#include "lcskt/scenarios.hpp"
#include "lcskt/sweep.hpp"

namespace py = pybind11;
using namespace lcskt;

namespace {

ParamMap params_from_dict(const py::dict& d) {
    ParamMap out;
    for (auto item : d) {
        std::string name = py::cast<std::string>(item.first);
        std::string value = py::cast<std::string>(py::str(item.second));
        auto scalar = parse_scalar_literal(value);
        if (!scalar) throw InvalidParams("parameter " + name + ": bad value " + value);
        out[name] = *scalar;
    }
    return out;
}

py::dict algebra_dict(const LieAlgebra& g) {
    py::dict out;
    out["dim"] = g.dim();
    out["structure"] = print_real_dsl(g);
    return out;
}

py::dict check(const std::string& text, const py::dict& params) {
    ParsedInput input = parse_input(text, params_from_dict(params));
    LieAlgebra g = input.is_real() ? *input.real : build_from_complex(*input.complex_eqs).algebra;
    py::dict out = algebra_dict(g);
    ValidationReport v = g.validate();
    out["jacobi"] = v.ok;
    if (!v.ok) {
        out["violation"] = py::make_tuple(v.i, v.j, v.k);
        return out;
    }
    std::optional<int> step = g.nilpotency_step();
    out["step"] = step ? py::object(py::int_(*step)) : py::object(py::none());
    out["lower_central_series"] = g.lower_central_series_dims();
    out["unimodular"] = g.is_unimodular();
    return out;
}

py::dict canonical(const std::string& text, const py::dict& params) {
    ParsedInput input = parse_input(text, params_from_dict(params));
    py::dict out;
    if (input.is_real()) {
        out["kind"] = "real";
        out["canonical"] = print_real_dsl(*input.real);
    } else {
        out["kind"] = "complex";
        out["canonical"] = print_complex_dsl(*input.complex_eqs);
        out["realified"] = print_real_dsl(build_from_complex(*input.complex_eqs).algebra);
    }
    return out;
}

py::dict hermitian_dict(const HermitianStructure& h) {
    py::dict out;
    out["fundamental_form"] = h.fundamental_form().str();
    out["torsion"] = h.torsion().str();
    out["dH"] = h.torsion_derivative().str();
    out["lee_form"] = h.lee_form().str();
    MetricFlags f = h.classify();
    py::dict flags;
    flags["kahler"] = f.kahler;
    flags["skt"] = f.skt;
    flags["balanced"] = f.balanced;
    flags["lcb"] = f.lcb;
    flags["lck"] = f.lck;
    out["flags"] = flags;
    return out;
}

py::dict solution_dict(const LcsktSolution& sol) {
    py::dict out;
    out["classification"] = to_string(sol.classification);
    out["solution_dim"] = sol.dimension();
    out["particular"] =
        sol.particular ? py::object(py::str(sol.particular->str())) : py::object(py::none());
    py::list basis;
    for (const auto& b : sol.homogeneous_basis) basis.append(b.str());
    out["homogeneous_basis"] = basis;
    out["skt_but_not_lcskt"] = sol.skt_but_not_lcskt;
    return out;
}

py::dict hermitian(const std::string& text, const py::dict& params, const std::string& J,
                   const std::string& metric) {
    BuiltInput in = build_input(text, params_from_dict(params), J, MetricSpec{metric});
    HermitianStructure h(in.algebra, in.J, in.metric);
    py::dict out = hermitian_dict(h);
    out["input"] = algebra_dict(in.algebra);
    return out;
}

py::dict solve(const std::string& text, const py::dict& params, const std::string& J,
               const std::string& metric) {
    BuiltInput in = build_input(text, params_from_dict(params), J, MetricSpec{metric});
    HermitianStructure h(in.algebra, in.J, in.metric);
    py::dict out = solution_dict(h.lcskt_solve());
    out["input"] = algebra_dict(in.algebra);
    out["torsion"] = h.torsion().str();
    out["dH"] = h.torsion_derivative().str();
    return out;
}

AlmostAbelianData data_from_args(int n, const std::string& a, const std::vector<std::string>& v,
                                 const std::vector<std::vector<std::string>>& A,
                                 const std::optional<std::vector<std::vector<std::string>>>& J1) {
    AlmostAbelianData d;
    d.n = n;
    auto ar = parse_rational(a);
    if (!ar) throw InvalidParams("a must be rational");
    d.a = *ar;
    int m = d.n1();
    d.v.assign(m, Rat(0));
    for (size_t i = 0; i < v.size() && i < static_cast<size_t>(m); ++i) {
        auto val = parse_rational(v[i]);
        if (!val) throw InvalidParams("bad entry in v: " + v[i]);
        d.v[i] = *val;
    }
    d.A = Mat<Rat>(m, m);
    if (!A.empty()) {
        if (static_cast<int>(A.size()) != m) throw InvalidParams("A needs 2n-2 rows");
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(A[i].size()) != m) throw InvalidParams("A needs 2n-2 columns");
            for (int j = 0; j < m; ++j) {
                auto val = parse_rational(A[i][j]);
                if (!val) throw InvalidParams("bad entry in A: " + A[i][j]);
                d.A(i, j) = *val;
            }
        }
    }
    if (J1) {
        d.J1 = Mat<Rat>(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                auto val = parse_rational((*J1)[i][j]);
                if (!val) throw InvalidParams("bad entry in J1");
                d.J1(i, j) = *val;
            }
    } else {
        d.J1 = AlmostAbelianData::standard_J1(m);
    }
    return d;
}

py::dict almost_abelian_report(const AlmostAbelianData& d) {
    BuiltAlmostAbelian built = build_almost_abelian(d);
    py::dict out;
    out["input"] = algebra_dict(built.algebra);
    out["hermitian"] = hermitian_dict(built.hermitian);
    out["lee_form_trace_formula"] = lee_form_trace_formula(d).str();
    RicciForms rf = ricci_forms(d);
    py::dict ricci;
    ricci["chern"] = rf.chern.str();
    ricci["bismut"] = rf.bismut.str();
    out["ricci"] = ricci;
    out["skt_certificate"] = skt_check(d);
    out["solution"] = solution_dict(built.hermitian.lcskt_solve());
    if (!is_zero(d.A.det())) {
        NondegenerateDecision dec = lcskt_decide_nondegenerate(d);
        py::dict decision;
        decision["lcskt"] = dec.lcskt;
        decision["lambda_kind"] = dec.lambda_kind == NondegenerateDecision::LambdaKind::NONE ? "none"
                                  : dec.lambda_kind == NondegenerateDecision::LambdaKind::UNIQUE
                                      ? "unique"
                                      : "all";
        decision["lambda"] = to_string(dec.lambda);
        decision["normal"] = dec.normal;
        decision["trivial"] = dec.trivial;
        out["nondegenerate_decision"] = decision;
    } else {
        out["nondegenerate_decision"] = py::none();
    }
    return out;
}

py::dict almost_abelian(int n, const std::string& a, const std::vector<std::string>& v,
                        const std::vector<std::vector<std::string>>& A,
                        const std::optional<std::vector<std::vector<std::string>>>& J1) {
    return almost_abelian_report(data_from_args(n, a, v, A, J1));
}

py::dict almost_abelian_catalog(const std::string& name, const py::dict& params) {
    CatalogEntry entry = catalog_get(name, params_from_dict(params));
    if (!entry.adapted) throw InvalidParams(name + " has no adapted presentation");
    return almost_abelian_report(*entry.adapted);
}

py::dict lattice(const std::string& name, const py::dict& params, double t0, double tolerance) {
    CatalogEntry entry = catalog_get(name, params_from_dict(params));
    if (!entry.adapted) throw InvalidParams(name + " has no adapted presentation");
    LatticeScreen screen = lattice_screen(*entry.adapted, t0, tolerance);
    py::dict out;
    out["t0"] = screen.t0;
    out["char_poly"] = screen.char_poly;
    out["all_integral"] = screen.all_integral;
    return out;
}

py::dict scenario_dict(const ScenarioResult& r) {
    py::dict out;
    out["id"] = r.id;
    out["description"] = r.description;
    out["expected"] = r.expected;
    out["computed"] = r.computed;
    out["match"] = r.match;
    return out;
}

py::dict sweep(const std::string& family, int draws, std::uint64_t seed) {
    SweepResult r = run_sweep(family, draws, seed);
    py::dict out;
    out["family"] = r.family;
    out["seed"] = r.seed;
    out["draws"] = r.draws;
    out["passes"] = r.passes;
    out["failures"] = r.failures;
    out["ok"] = r.ok();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Hermitian geometry on low-dimensional Lie algebras";

    // translators run newest-first: register the base before the leaves
    py::register_exception<Error>(m, "EngineError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "DslParseError", PyExc_ValueError);
    py::register_exception<UnboundParam>(m, "UnboundParamError", PyExc_KeyError);
    py::register_exception<UnknownName>(m, "UnknownNameError", PyExc_KeyError);
    py::register_exception<UnknownScenario>(m, "UnknownScenarioError", PyExc_KeyError);

    m.def("check", &check, py::arg("text"), py::arg("params") = py::dict(),
          "Jacobi test, nilpotency step and unimodularity of a structure-equation tuple");
    m.def("canonical", &canonical, py::arg("text"), py::arg("params") = py::dict(),
          "parse and print the canonical form");
    m.def("hermitian", &hermitian, py::arg("text"), py::arg("params") = py::dict(),
          py::arg("J") = "standard", py::arg("metric") = "identity",
          "fundamental form, Bismut torsion, Lee form and metric-class flags");
    m.def("solve", &solve, py::arg("text"), py::arg("params") = py::dict(),
          py::arg("J") = "standard", py::arg("metric") = "identity",
          "solve dH = alpha ^ H over closed 1-forms");
    m.def("almost_abelian", &almost_abelian, py::arg("n") = 3, py::arg("a") = "0",
          py::arg("v") = std::vector<std::string>{},
          py::arg("A") = std::vector<std::vector<std::string>>{},
          py::arg("J1") = std::optional<std::vector<std::vector<std::string>>>{},
          "full adapted-basis analysis of (a, v, A, J1)");
    m.def("almost_abelian_catalog", &almost_abelian_catalog, py::arg("name"),
          py::arg("params") = py::dict(), "the same analysis for a catalog entry");
    m.def("lattice_screen", &lattice, py::arg("name"), py::arg("params") = py::dict(),
          py::arg("t0") = 6.283185307179586, py::arg("tolerance") = 1e-9,
          "characteristic-polynomial integrality screen for exp(t0 ad)");
    m.def("catalog_names", &catalog_names);
    m.def("scenario_ids", &scenario_ids);
    m.def("run_scenario", [](const std::string& id) { return scenario_dict(run_scenario(id)); },
          py::arg("id"));
    m.def("run_all_scenarios", [] {
        py::list out;
        for (const auto& r : run_all_scenarios()) out.append(scenario_dict(r));
        return out;
    });
    m.def("sweep", &sweep, py::arg("family"), py::arg("draws") = 100, py::arg("seed") = 0,
          "randomized identity sweep; deterministic per seed");
    m.def("sweep_families", &sweep_families);
}
