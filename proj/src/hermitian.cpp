#include "lcskt/hermitian.hpp"

#include <algorithm>

namespace lcskt {

const char* to_string(LcsktClass c) {
    switch (c) {
        case LcsktClass::NOT_LCSKT: return "NOT_LCSKT";
        case LcsktClass::TRIVIAL_LCSKT: return "TRIVIAL_LCSKT";
        case LcsktClass::NONTRIVIAL_LCSKT: return "NONTRIVIAL_LCSKT";
        case LcsktClass::KAHLER_LIKE: return "KAHLER_LIKE";
    }
    return "?";
}

bool LcsktSolution::exists_nonzero() const {
    if (!particular) return false;
    if (!particular->is_zero()) return true;
    return !homogeneous_basis.empty();
}

HermitianStructure::HermitianStructure(LieAlgebra g, ComplexStructure J, Mat<Scalar> metric)
    : g_(std::move(g)), J_(std::move(J)), metric_(std::move(metric)) {
    int dim = g_.dim();
    if (dim % 2 != 0) throw InvalidParams("Hermitian structure needs even dimension");
    if (J_.dim() != dim || metric_.rows() != dim || metric_.cols() != dim) throw AmbientMismatch();
    g_.require_valid();
    if (!J_.is_integrable(g_)) throw NonIntegrable();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (!metric_(i, j).is_real()) throw NotCompatible("metric entries must be real");
            if (metric_(i, j) != metric_(j, i)) throw NotCompatible("metric must be symmetric");
        }
    // g(JX, JY) = g(X, Y)
    if (J_.matrix().transpose() * metric_ * J_.matrix() != metric_)
        throw NotCompatible("metric is not J-invariant");
    // Exact positive definiteness via leading principal minors.
    for (int k = 1; k <= dim; ++k) {
        Mat<Scalar> lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead(i, j) = metric_(i, j);
        Scalar det = lead.det();
        if (!det.is_real() || sgn(det.re) <= 0) throw NotPositiveDefinite();
    }

    // Omega(X, Y) = g(JX, Y); entries (J^t G)_{ab}.
    Mat<Scalar> omega_matrix = J_.matrix().transpose() * metric_;
    omega_ = KForm(dim, 2);
    for (int a = 1; a <= dim; ++a)
        for (int b = a + 1; b <= dim; ++b) {
            if (omega_matrix(a - 1, b - 1) != -omega_matrix(b - 1, a - 1))
                throw NotCompatible("fundamental form is not alternating");
            omega_.set_term(mask_from_indices({a, b}), omega_matrix(a - 1, b - 1));
        }

    torsion_ = dc(g_, J_, omega_);
    KForm bracket_route = torsion_bracket_formula();
    if (torsion_ != bracket_route)
        throw RouteMismatch("torsion: d^c Omega vs bracket-trace formula");
    dH_ = g_.d(torsion_);
}

HermitianStructure HermitianStructure::with_identity_metric(LieAlgebra g, ComplexStructure J) {
    int dim = g.dim();
    return HermitianStructure(std::move(g), std::move(J), Mat<Scalar>::identity(dim));
}

Scalar HermitianStructure::inner(const std::vector<Scalar>& X, const std::vector<Scalar>& Y) const {
    std::vector<Scalar> gy = metric_.apply(Y);
    Scalar out(0);
    for (size_t i = 0; i < X.size(); ++i) out += X[i] * gy[i];
    return out;
}

KForm HermitianStructure::torsion_bracket_formula() const {
    int dim = g_.dim();
    std::vector<std::vector<Scalar>> Je(dim);
    for (int i = 0; i < dim; ++i) {
        std::vector<Scalar> e(dim, Scalar(0));
        e[i] = Scalar(1);
        Je[i] = J_.apply(e);
    }
    KForm H(dim, 3);
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            for (int k = j + 1; k <= dim; ++k) {
                std::vector<Scalar> ei(dim, Scalar(0)), ej(dim, Scalar(0)), ek(dim, Scalar(0));
                ei[i - 1] = Scalar(1);
                ej[j - 1] = Scalar(1);
                ek[k - 1] = Scalar(1);
                Scalar value = -inner(g_.bracket(Je[i - 1], Je[j - 1]), ek) -
                               inner(g_.bracket(Je[j - 1], Je[k - 1]), ei) -
                               inner(g_.bracket(Je[k - 1], Je[i - 1]), ej);
                H.set_term(mask_from_indices({i, j, k}), value);
            }
    return H;
}

KForm HermitianStructure::lee_form() const {
    int dim = g_.dim();
    int nn = n();
    KForm power = omega_;
    for (int k = 1; k < nn - 1; ++k) power = power.wedge(omega_);
    KForm lhs = g_.d(power);  // degree 2n-1
    // (n-1) * sum_a theta_a (f^a ^ power) = d(power)
    std::vector<KForm> columns;
    for (int a = 1; a <= dim; ++a)
        columns.push_back(KForm::coframe(dim, a).wedge(power).scaled(Scalar(nn - 1)));
    std::map<Mask, int> row_of;
    auto note_rows = [&row_of](const KForm& f) {
        for (const auto& [m, c] : f.terms())
            if (!row_of.count(m)) {
                int next = static_cast<int>(row_of.size());
                row_of[m] = next;
            }
    };
    for (const auto& col : columns) note_rows(col);
    note_rows(lhs);
    Mat<Rat> A(static_cast<int>(row_of.size()), dim);
    std::vector<Rat> b(row_of.size(), Rat(0));
    for (int a = 0; a < dim; ++a)
        for (const auto& [m, c] : columns[a].terms()) {
            if (!c.is_real()) throw RouteMismatch("lee system has complex entry");
            A(row_of[m], a) = c.re;
        }
    for (const auto& [m, c] : lhs.terms()) {
        if (!c.is_real()) throw RouteMismatch("lee system has complex entry");
        b[row_of[m]] = c.re;
    }
    auto sol = solve_affine(A, b);
    if (!sol || !sol->kernel_basis.empty())
        throw RouteMismatch("lee form not unique/solvable; fundamental form degenerate?");
    KForm theta(dim, 1);
    for (int a = 0; a < dim; ++a) theta.set_term(static_cast<Mask>(1u << a), Scalar(sol->particular[a]));
    return theta;
}

MetricFlags HermitianStructure::classify() const {
    MetricFlags flags;
    KForm domega = g_.d(omega_);
    flags.kahler = domega.is_zero();
    flags.skt = dH_.is_zero();
    KForm theta = lee_form();
    flags.balanced = theta.is_zero();
    flags.lcb = g_.d(theta).is_zero();
    flags.lck = flags.lcb && (domega == theta.wedge(omega_));
    return flags;
}

LcsktSolution HermitianStructure::lcskt_solve() const {
    int dim = g_.dim();
    LcsktSolution sol;
    if (torsion_.is_zero()) {
        sol.classification = LcsktClass::KAHLER_LIKE;
        sol.particular = KForm(dim, 1);
        sol.homogeneous_basis = closed_one_forms(g_);
        return sol;
    }

    // Unknowns: coefficients of alpha over the coframe.  Rows: the 2-form
    // coefficients of d alpha and the 4-form coefficients of alpha ^ H - dH.
    std::vector<KForm> dcols, wcols;
    for (int a = 1; a <= dim; ++a) {
        dcols.push_back(g_.d(KForm::coframe(dim, a)));
        wcols.push_back(KForm::coframe(dim, a).wedge(torsion_));
    }
    std::map<Mask, int> drow, wrow;
    auto note = [](std::map<Mask, int>& rows, const KForm& f) {
        for (const auto& [m, c] : f.terms())
            if (!rows.count(m)) {
                int next = static_cast<int>(rows.size());
                rows[m] = next;
            }
    };
    for (const auto& f : dcols) note(drow, f);
    for (const auto& f : wcols) note(wrow, f);
    note(wrow, dH_);
    int rows = static_cast<int>(drow.size() + wrow.size());
    Mat<Rat> A(rows, dim);
    std::vector<Rat> b(rows, Rat(0));
    int offset = static_cast<int>(drow.size());
    for (int a = 0; a < dim; ++a) {
        for (const auto& [m, c] : dcols[a].terms()) A(drow[m], a) = c.re;
        for (const auto& [m, c] : wcols[a].terms()) A(offset + wrow[m], a) = c.re;
    }
    for (const auto& [m, c] : dH_.terms()) b[offset + wrow[m]] = c.re;

    auto affine = solve_affine(A, b);
    bool dH_zero = dH_.is_zero();
    if (!affine) {
        sol.classification = LcsktClass::NOT_LCSKT;
        return sol;
    }
    std::vector<Scalar> pc(affine->particular.begin(), affine->particular.end());
    sol.particular = one_form_from_coefficients(dim, pc);
    for (auto& v : affine->kernel_basis) {
        std::vector<Scalar> coeffs(v.begin(), v.end());
        sol.homogeneous_basis.push_back(one_form_from_coefficients(dim, coeffs));
    }
    // Re-verify, do not assume: every returned element must satisfy both
    // equations exactly.
    auto check = [&](const KForm& alpha, const KForm& rhs) {
        if (!g_.d(alpha).is_zero()) throw RouteMismatch("solver returned non-closed alpha");
        if (alpha.wedge(torsion_) != rhs) throw RouteMismatch("solver returned alpha with alpha^H != rhs");
    };
    check(*sol.particular, dH_);
    for (const auto& h : sol.homogeneous_basis) check(h, KForm(dim, 4));

    if (!dH_zero) {
        sol.classification = LcsktClass::NONTRIVIAL_LCSKT;
    } else if (sol.exists_nonzero()) {
        sol.classification = LcsktClass::TRIVIAL_LCSKT;
    } else {
        sol.classification = LcsktClass::NOT_LCSKT;
        sol.skt_but_not_lcskt = true;
    }
    return sol;
}

HermitianStructure hermitian_from_params(const RealifiedStructure& rs, const MetricParams& m) {
    m.require_positive_definite();
    HermitianStructure h(rs.algebra, rs.J, m.metric_matrix());
    // The realified fundamental form must match the g-derived one term by term.
    ComplexCoframe frame(rs.J);
    if (frame.to_real(m.fundamental_form_complex()) != h.fundamental_form())
        throw RouteMismatch("fundamental form: metric route vs realified closed form");
    return h;
}

namespace {

template <class P>
bool check_dH(const P& params, const MetricParams& m, const KForm& expected_complex) {
    RealifiedStructure rs = build_family(params);
    HermitianStructure h = hermitian_from_params(rs, m);
    ComplexCoframe frame(rs.J);
    return h.torsion_derivative() == frame.to_real(expected_complex);
}

}  // namespace

bool dH_closed_form_check(const NonNilpotentFamilyParams& p, const MetricParams& m) {
    return check_dH(p, m, expected_dH(p, m));
}

bool dH_closed_form_check(const ReducedFamilyParams& p, const MetricParams& m) {
    return check_dH(p, m, expected_dH(p, m));
}

bool dH_closed_form_check_e1(const NilpotentFamilyParams& p, const MetricParams& m) {
    if (p.epsilon != 1) throw InvalidParams("closed form stated for epsilon = 1");
    return check_dH(p, m, expected_dH_nilpotent_e1(p, m));
}

}  // namespace lcskt
