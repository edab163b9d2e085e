#include "lcskt/families.hpp"

namespace lcskt {

Mat<Scalar> standard_frame_rows(int n) {
    Mat<Scalar> C(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        C(j, 2 * j) = Scalar(1);
        C(j, 2 * j + 1) = Scalar::i();
        C(n + j, 2 * j) = Scalar(1);
        C(n + j, 2 * j + 1) = -Scalar::i();
    }
    return C;
}

RealifiedStructure realify(const ComplexEquations& eqs) {
    int n = eqs.n;
    if (n < 2 || static_cast<int>(eqs.d_omega.size()) != n)
        throw InvalidParams("complex equations need one d omega^k entry per index");
    Mat<Scalar> C = standard_frame_rows(n);
    std::vector<KForm> d1(2 * n, KForm(2 * n, 2));
    for (int k = 0; k < n; ++k) {
        KForm real_coords = eqs.d_omega[k].substitute(C);  // d omega^(k+1) over f
        d1[2 * k] = real_coords.real_part();
        d1[2 * k + 1] = real_coords.imag_part();
    }
    LieAlgebra g = LieAlgebra::from_differentials(std::move(d1));
    g.require_valid();
    return RealifiedStructure{std::move(g), ComplexStructure::standard(2 * n)};
}

void NonNilpotentFamilyParams::validate() const {
    if (E.norm() != Rat(1)) throw InvalidParams("|E| != 1");
    if (is_zero(b)) throw InvalidParams("b = 0");
}

void NilpotentFamilyParams::validate() const {
    if (epsilon != 0 && epsilon != 1) throw InvalidParams("epsilon outside {0,1}");
    if (rho != 0 && rho != 1) throw InvalidParams("rho outside {0,1}");
}

void ReducedFamilyParams::validate() const {
    if (rho != 0 && rho != 1) throw InvalidParams("rho outside {0,1}");
}

namespace {

KForm cform(std::initializer_list<std::pair<std::vector<int>, Scalar>> terms) {
    KForm f(6, 2);
    for (const auto& [idx, c] : terms) f += KForm::monomial(6, idx, c);
    return f;
}

}  // namespace

ComplexEquations family_equations(const NonNilpotentFamilyParams& p) {
    p.validate();
    Scalar ib = Scalar::i() * Scalar(p.b);
    ComplexEquations eqs;
    eqs.n = 3;
    eqs.d_omega = {
        KForm(6, 2),
        cform({{{1, 3}, p.E}, {{1, 6}, Scalar(1)}}),
        cform({{{1, 4}, p.A}, {{1, 5}, ib}, {{2, 4}, -(ib * p.E.conj())}}),
    };
    return eqs;
}

ComplexEquations family_equations(const NilpotentFamilyParams& p) {
    p.validate();
    Scalar one_minus_eps(1 - p.epsilon);
    ComplexEquations eqs;
    eqs.n = 3;
    eqs.d_omega = {
        KForm(6, 2),
        cform({{{1, 4}, Scalar(p.epsilon)}}),
        cform({{{1, 2}, Scalar(p.rho)},
               {{1, 4}, one_minus_eps * p.A},
               {{1, 5}, p.B},
               {{2, 4}, p.C},
               {{2, 5}, one_minus_eps * p.D}}),
    };
    return eqs;
}

ComplexEquations family_equations(const ReducedFamilyParams& p) {
    p.validate();
    ComplexEquations eqs;
    eqs.n = 3;
    eqs.d_omega = {
        KForm(6, 2),
        KForm(6, 2),
        cform({{{1, 2}, Scalar(p.rho)}, {{1, 4}, Scalar(1)}, {{1, 5}, p.B}, {{2, 5}, p.D}}),
    };
    return eqs;
}

ComplexEquations bi_invariant_equations() {
    ComplexEquations eqs;
    eqs.n = 3;
    eqs.d_omega = {KForm(6, 2), KForm(6, 2), cform({{{1, 2}, Scalar(1)}})};
    return eqs;
}

RealifiedStructure build_family(const NonNilpotentFamilyParams& p) {
    return realify(family_equations(p));
}
RealifiedStructure build_family(const NilpotentFamilyParams& p) {
    return realify(family_equations(p));
}
RealifiedStructure build_family(const ReducedFamilyParams& p) {
    return realify(family_equations(p));
}

bool MetricParams::positive_definite() const {
    if (sgn(r) <= 0 || sgn(s) <= 0 || sgn(t) <= 0) return false;
    if (sgn(r * s - u.norm()) <= 0) return false;
    if (sgn(s * t - v.norm()) <= 0) return false;
    if (sgn(r * t - z.norm()) <= 0) return false;
    Scalar w = Scalar::i() * u.conj() * v.conj() * z;
    Rat det3 = r * s * t + 2 * w.re - t * u.norm() - r * v.norm() - s * z.norm();
    return sgn(det3) > 0;
}

void MetricParams::require_positive_definite() const {
    if (!positive_definite()) throw NotPositiveDefinite();
}

KForm MetricParams::fundamental_form_complex() const {
    Scalar i = Scalar::i();
    return cform({{{1, 4}, i * Scalar(r)},
                  {{2, 5}, i * Scalar(s)},
                  {{3, 6}, i * Scalar(t)},
                  {{1, 5}, u},
                  {{2, 4}, -u.conj()},
                  {{2, 6}, v},
                  {{3, 5}, -v.conj()},
                  {{1, 6}, z},
                  {{3, 4}, -z.conj()}});
}

Mat<Scalar> MetricParams::metric_matrix() const {
    // g = sum_k sigma_k (omega^{a_k} (x) conj omega^{b_k} + conj omega^{b_k} (x) omega^{a_k})
    struct Term {
        Scalar sigma;
        int a, b;
    };
    Scalar i = Scalar::i();
    const Term terms[] = {
        {Scalar(r), 1, 1},      {Scalar(s), 2, 2},      {Scalar(t), 3, 3},
        {-(i * u), 1, 2},       {i * u.conj(), 2, 1},   {-(i * v), 2, 3},
        {i * v.conj(), 3, 2},   {-(i * z), 1, 3},       {i * z.conj(), 3, 1},
    };
    // omega^j evaluated on the realified basis f_a.
    auto omega_at = [](int j, int a) -> Scalar {
        if (a == 2 * j - 1) return Scalar(1);
        if (a == 2 * j) return Scalar::i();
        return Scalar(0);
    };
    Mat<Scalar> g(6, 6);
    for (int x = 1; x <= 6; ++x)
        for (int y = 1; y <= 6; ++y) {
            Scalar val(0);
            for (const Term& t_ : terms) {
                val += t_.sigma * (omega_at(t_.a, x) * omega_at(t_.b, y).conj() +
                                   omega_at(t_.b, x).conj() * omega_at(t_.a, y));
            }
            if (!val.is_real()) throw RouteMismatch("metric realification produced complex entry");
            g(x - 1, y - 1) = val;
        }
    return g;
}

namespace {

KForm four_form(std::initializer_list<std::pair<std::vector<int>, Scalar>> terms) {
    KForm f(6, 4);
    for (const auto& [idx, c] : terms) f += KForm::monomial(6, idx, c);
    return f;
}

}  // namespace

KForm expected_dH(const NonNilpotentFamilyParams& p, const MetricParams& m) {
    Scalar b2t = Scalar(p.b * p.b * m.t);
    return four_form({{{1, 2, 4, 5}, Scalar(-4) * b2t}, {{1, 3, 4, 6}, Scalar(-4) * Scalar(m.s)}});
}

KForm expected_dH(const ReducedFamilyParams& p, const MetricParams& m) {
    Scalar bracket = Scalar(p.rho) + Scalar(p.B.norm()) - Scalar(2) * Scalar(p.D.re);
    return four_form({{{1, 2, 4, 5}, Scalar(-2) * Scalar(m.t) * bracket}});
}

KForm expected_dH_nilpotent_e1(const NilpotentFamilyParams& p, const MetricParams& m) {
    Scalar bracket = Scalar(p.rho) + Scalar(p.B.norm()) + Scalar(p.C.norm());
    return four_form({{{1, 2, 4, 5}, Scalar(-2) * Scalar(m.t) * bracket}});
}

// In complex terms: -(2it conj(v)/(ts-|v|^2)) omega^1 + conj
// + (4t^2/(ts-|v|^2)) Re(omega^2).  Resubstitution into dH = alpha ^ H fixes
// the global sign unambiguously: that equation is invariant under H -> -H,
// so the sign is independent of any d^c convention.
KForm h16_alpha_closed_form(const MetricParams& m) {
    Rat denom = m.s * m.t - m.v.norm();
    // One of the positivity minors; cannot vanish for admissible metrics.
    if (is_zero(denom)) throw NotPositiveDefinite();
    KForm alpha(6, 1);
    alpha += KForm::monomial(6, {1}, Scalar(-4 * m.t * m.v.im / denom));
    alpha += KForm::monomial(6, {2}, Scalar(4 * m.t * m.v.re / denom));
    alpha += KForm::monomial(6, {3}, Scalar(4 * m.t * m.t / denom));
    return alpha;
}

}  // namespace lcskt
