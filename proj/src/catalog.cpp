#include "lcskt/catalog.hpp"

namespace lcskt {

namespace {

Rat need(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw UnboundParam(name);
    if (!it->second.is_real()) throw InvalidParams(name + " must be rational");
    return it->second.re;
}

CatalogEntry make_h8() {
    CatalogEntry e;
    e.name = "h8";
    e.description = "2-step nilpotent, one structure line: de6 = e12; abelian complex structure";
    e.algebra = parse_real_dsl("(0,0,0,0,0,12)");
    e.coframe = parse_complex_dsl("d3 = 11'");
    return e;
}

CatalogEntry make_h16() {
    CatalogEntry e;
    e.name = "h16";
    e.description = "3-step nilpotent (0,0,0,12,14,24); nilpotent non-abelian complex structure";
    e.algebra = parse_real_dsl("(0,0,0,12,14,24)");
    e.coframe = parse_complex_dsl("d2 = 11'\nd3 = 12 - 12'");
    return e;
}

CatalogEntry make_l8(const ParamMap& params) {
    Rat p = need(params, "p"), q = need(params, "q"), s = need(params, "s");
    if (is_zero(p)) throw InvalidParams("l8 requires p != 0");
    if (is_zero(q) || abs(q) > abs(p)) throw InvalidParams("l8 requires 0 < |q| <= |p|");
    CatalogEntry e;
    e.name = "l8";
    e.description = "indecomposable almost abelian (p*16,q*26,q*36,s*46+56,s*56-46,0)";
    ParamMap bound = params;
    e.algebra = parse_real_dsl("(p*16,q*26,q*36,s*46+56,s*56-46,0)", bound);
    e.J = ComplexStructure::from_pairs(6, {{1, 6}, {2, 3}, {4, 5}});
    e.metric = Mat<Scalar>::identity(6);
    AlmostAbelianData d;
    d.n = 3;
    d.a = p;
    d.v.assign(4, Rat(0));
    d.A = Mat<Rat>(4, 4);
    d.A(0, 0) = q;
    d.A(1, 1) = q;
    d.A(2, 2) = s;
    d.A(2, 3) = Rat(1);
    d.A(3, 2) = Rat(-1);
    d.A(3, 3) = s;
    d.J1 = AlmostAbelianData::standard_J1(4);
    e.adapted = std::move(d);
    return e;
}

CatalogEntry make_l23() {
    CatalogEntry e;
    e.name = "l23_0";
    e.description = "decomposable unimodular almost abelian (26,-16,46,0,0,0)";
    e.algebra = parse_real_dsl("(26,-16,46,0,0,0)");
    e.J = ComplexStructure::from_pairs(6, {{1, 2}, {3, 5}, {4, 6}});
    e.metric = Mat<Scalar>::identity(6);
    // Adapted basis e1 = -f4, e4 = f1, e_k = f_k with J e1 = e6, J e2 = e4,
    // J e3 = e5 and brackets [e6,e1] = -e3, A e2 = e4, A e4 = -e2.
    AlmostAbelianData d;
    d.n = 3;
    d.a = Rat(0);
    d.v = {Rat(0), Rat(-1), Rat(0), Rat(0)};
    d.A = Mat<Rat>(4, 4);
    d.A(2, 0) = Rat(1);
    d.A(0, 2) = Rat(-1);
    d.J1 = Mat<Rat>(4, 4);
    d.J1(2, 0) = Rat(1);   // J e2 = e4
    d.J1(3, 1) = Rat(1);   // J e3 = e5
    d.J1(0, 2) = Rat(-1);
    d.J1(1, 3) = Rat(-1);
    e.adapted = std::move(d);
    return e;
}

CatalogEntry make_abelian6() {
    CatalogEntry e;
    e.name = "abelian6";
    e.description = "abelian, dimension 6";
    e.algebra = LieAlgebra::abelian(6);
    e.J = ComplexStructure::standard(6);
    e.metric = Mat<Scalar>::identity(6);
    return e;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"abelian6", "h8", "h16", "l8", "l23_0"}; }

CatalogEntry catalog_get(const std::string& name, const ParamMap& params) {
    if (name == "h8") return make_h8();
    if (name == "h16") return make_h16();
    if (name == "l8") return make_l8(params);
    if (name == "l23_0") return make_l23();
    if (name == "abelian6") return make_abelian6();
    throw UnknownName(name);
}

}  // namespace lcskt
