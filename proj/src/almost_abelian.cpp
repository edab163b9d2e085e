#include "lcskt/almost_abelian.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace lcskt {

namespace {

Mat<Rat> symmetric_part(const Mat<Rat>& m) {
    Mat<Rat> s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s(i, j) = (m(i, j) + m(j, i)) / 2;
    return s;
}

Rat trace(const Mat<Rat>& m) {
    Rat t(0);
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

bool commute(const Mat<Rat>& x, const Mat<Rat>& y) { return (x * y - y * x).is_zero(); }

}  // namespace

void AlmostAbelianData::validate() const {
    if (n < 3) throw InvalidParams("half-dimension must be >= 3");
    int m = n1();
    if (static_cast<int>(v.size()) != m || A.rows() != m || A.cols() != m || J1.rows() != m ||
        J1.cols() != m)
        throw InvalidParams("almost abelian data has inconsistent sizes");
    Mat<Rat> sq = J1 * J1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (sq(i, j) != Rat(i == j ? -1 : 0)) throw IncompatibleJ1("J1^2 != -Id");
    if (!commute(A, J1)) throw IncompatibleJ1("[A, J1] != 0");
}

Mat<Rat> AlmostAbelianData::standard_J1(int n1_dim) {
    Mat<Rat> J1(n1_dim, n1_dim);
    for (int k = 0; 2 * k + 1 < n1_dim; ++k) {
        J1(2 * k + 1, 2 * k) = Rat(1);
        J1(2 * k, 2 * k + 1) = Rat(-1);
    }
    return J1;
}

Mat<Rat> AlmostAbelianData::B() const {
    int m = n1();
    Mat<Rat> b(m + 1, m + 1);
    b(0, 0) = a;
    for (int i = 0; i < m; ++i) {
        b(i + 1, 0) = v[i];
        for (int j = 0; j < m; ++j) b(i + 1, j + 1) = A(i, j);
    }
    return b;
}

BuiltAlmostAbelian build_almost_abelian(const AlmostAbelianData& d) {
    d.validate();
    int dim = d.dim();
    int m = d.n1();
    std::vector<KForm> d1(dim, KForm(dim, 2));
    // [e_2n, e_1] = a e_1 + v and [e_2n, X] = AX give
    //   de^1 = a e^1 ^ e^2n,  de^k = v_k e^1 ^ e^2n + sum_j A_kj e^j ^ e^2n.
    d1[0] = KForm::monomial(dim, {1, dim}, Scalar(d.a));
    for (int k = 0; k < m; ++k) {
        KForm f = KForm::monomial(dim, {1, dim}, Scalar(d.v[k]));
        for (int j = 0; j < m; ++j) f += KForm::monomial(dim, {j + 2, dim}, Scalar(d.A(k, j)));
        d1[k + 1] = std::move(f);
    }
    LieAlgebra g = LieAlgebra::from_differentials(std::move(d1));
    g.require_valid();

    Mat<Scalar> J(dim, dim);
    J(dim - 1, 0) = Scalar(1);   // J e_1 = e_2n
    J(0, dim - 1) = Scalar(-1);  // J e_2n = -e_1
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) J(i + 1, j + 1) = Scalar(d.J1(i, j));
    ComplexStructure Jc{std::move(J)};
    HermitianStructure h = HermitianStructure::with_identity_metric(g, Jc);
    return BuiltAlmostAbelian{std::move(g), std::move(Jc), std::move(h)};
}

bool lcskt_conditions_check(const AlmostAbelianData& d, const KForm& alpha) {
    d.validate();
    int dim = d.dim();
    int m = d.n1();
    if (alpha.dim() != dim || alpha.degree() != 1) throw AmbientMismatch();
    if (!alpha.is_real()) throw InvalidParams("alpha must be a real 1-form");
    std::vector<Scalar> coeffs = one_form_coefficients(alpha);
    Rat a1 = coeffs[0].re;                    // alpha(e_1)
    Rat lambda = coeffs[dim - 1].re;          // alpha(e_2n)
    std::vector<Rat> an1(m);                  // alpha restricted to the ideal part
    for (int i = 0; i < m; ++i) an1[i] = coeffs[i + 1].re;

    // (c1): a alpha(e_1) + alpha(v) = 0 and A^t (alpha|n1) = 0.
    Rat av(0);
    for (int i = 0; i < m; ++i) av += an1[i] * d.v[i];
    if (!is_zero(d.a * a1 + av)) return false;
    for (int j = 0; j < m; ++j) {
        Rat entry(0);
        for (int i = 0; i < m; ++i) entry += d.A(i, j) * an1[i];  // (A^t alpha)_j
        if (!is_zero(entry)) return false;
    }

    // (c2): alpha ^ M = 0 on the ideal, M(Y,Z) = g(S(A) J1 Y, Z).
    Mat<Rat> SJ = symmetric_part(d.A) * d.J1;
    auto M = [&](int y, int z) { return SJ(z, y); };  // identity metric
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            for (int z = y + 1; z < m; ++z)
                if (!is_zero(an1[x] * M(y, z) - an1[y] * M(x, z) + an1[z] * M(x, y))) return false;

    // (c3): g(S((a+lambda)A + A^2 + A^tA) J1 Y, Z) = (g(v,Y) alpha(Z) - g(v,Z) alpha(Y)) / 2.
    Mat<Rat> At = d.A.transpose();
    Mat<Rat> core = d.A.scaled(d.a + lambda) + d.A * d.A + At * d.A;
    Mat<Rat> N = symmetric_part(core) * d.J1;
    for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
            Rat lhs = N(z, y);
            Rat rhs = (d.v[y] * an1[z] - d.v[z] * an1[y]) / 2;
            if (lhs != rhs) return false;
        }
    return true;
}

NondegenerateDecision lcskt_decide_nondegenerate(const AlmostAbelianData& d) {
    d.validate();
    if (is_zero(d.A.det())) throw DegenerateA();
    NondegenerateDecision out;
    Mat<Rat> At = d.A.transpose();
    Mat<Rat> S = symmetric_part(d.A);
    Mat<Rat> R = symmetric_part(d.A.scaled(d.a) + d.A * d.A + At * d.A);
    out.normal = commute(d.A, At);
    if (S.is_zero()) {
        // A skew: R vanishes identically and every lambda works.
        out.lambda_kind = NondegenerateDecision::LambdaKind::ALL;
        out.lcskt = true;
        out.trivial = R.is_zero();
        return out;
    }
    int pi = -1, pj = -1;
    for (int i = 0; i < S.rows() && pi < 0; ++i)
        for (int j = 0; j < S.cols(); ++j)
            if (!is_zero(S(i, j))) {
                pi = i;
                pj = j;
                break;
            }
    Rat lambda = -R(pi, pj) / S(pi, pj);
    if ((S.scaled(lambda) + R).is_zero()) {
        out.lambda_kind = NondegenerateDecision::LambdaKind::UNIQUE;
        out.lambda = lambda;
        // alpha = lambda_1 e^1 + lambda e^2n with a lambda_1 = 0.
        out.lcskt = !is_zero(lambda) || is_zero(d.a);
        out.trivial = is_zero(lambda);
    } else {
        out.lambda_kind = NondegenerateDecision::LambdaKind::NONE;
        out.lcskt = false;
    }
    return out;
}

RicciForms ricci_forms(const AlmostAbelianData& d) {
    d.validate();
    int dim = d.dim();
    int m = d.n1();
    Rat trA = trace(d.A);
    RicciForms out;
    out.chern = KForm::monomial(dim, {1, dim}, Scalar(-(d.a * d.a + d.a * trA / 2)));
    Rat norm_v(0);
    for (const Rat& c : d.v) norm_v += c * c;
    out.bismut = KForm::monomial(dim, {1, dim}, Scalar(-(d.a * d.a - d.a * trA / 2 + norm_v)));
    for (int k = 0; k < m; ++k) {
        Rat atv(0);
        for (int i = 0; i < m; ++i) atv += d.A(i, k) * d.v[i];  // (A^t v)_k
        out.bismut += KForm::monomial(dim, {k + 2, dim}, Scalar(-atv));
    }
    return out;
}

KForm lee_form_trace_formula(const AlmostAbelianData& d) {
    d.validate();
    int dim = d.dim();
    KForm theta = KForm::monomial(dim, {dim}, Scalar(-trace(d.A)));
    std::vector<Rat> Jv(d.n1(), Rat(0));
    for (int i = 0; i < d.n1(); ++i)
        for (int j = 0; j < d.n1(); ++j) Jv[i] += d.J1(i, j) * d.v[j];
    for (int i = 0; i < d.n1(); ++i) theta += KForm::monomial(dim, {i + 2}, Scalar(Jv[i]));
    return theta;
}

bool skt_check(const AlmostAbelianData& d) {
    d.validate();
    Mat<Rat> At = d.A.transpose();
    return symmetric_part(d.A.scaled(d.a) + d.A * d.A + At * d.A).is_zero();
}

bool balanced_lcskt_implies_kahler(const AlmostAbelianData& d) {
    d.validate();
    Rat trA = trace(d.A);
    bool balanced = is_zero(trA);
    for (const Rat& c : d.v) balanced = balanced && is_zero(c);
    if (!balanced) throw InvalidParams("data is not balanced (need v = 0 and tr A = 0)");
    bool verdict;
    if (!is_zero(d.A.det())) {
        verdict = lcskt_decide_nondegenerate(d).lcskt;
    } else {
        verdict = build_almost_abelian(d).hermitian.lcskt_solve().exists_nonzero();
    }
    bool kahler = symmetric_part(d.A).is_zero();  // with v = 0 this is the Kaehler criterion
    return !verdict || kahler;
}

EigenDiagnostic eigen_diagnostic(const AlmostAbelianData& d, double tolerance) {
    d.validate();
    int m = d.n1();
    Eigen::MatrixXd A(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A(i, j) = d.A(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A);
    EigenDiagnostic out;
    double lambda = 0.0;
    if (!is_zero(d.A.det())) {
        NondegenerateDecision dec = lcskt_decide_nondegenerate(d);
        if (dec.lambda_kind == NondegenerateDecision::LambdaKind::UNIQUE) lambda = dec.lambda.get_d();
    }
    out.lambda_used = lambda;
    double target = -(d.a.get_d() + lambda) / 2.0;
    out.all_binned = true;
    for (int i = 0; i < m; ++i) {
        std::complex<double> ev(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        out.eigenvalues.push_back(ev);
        if (std::abs(ev.real()) <= tolerance)
            out.bin.push_back(0);
        else if (std::abs(ev.real() - target) <= tolerance)
            out.bin.push_back(1);
        else {
            out.bin.push_back(-1);
            out.all_binned = false;
        }
    }
    return out;
}

namespace {

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
    // Scaling and squaring with a Taylor core; machine accuracy at these sizes.
    double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    Eigen::MatrixXd scaled = m / std::pow(2.0, squarings);
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    Eigen::MatrixXd term = result;
    for (int k = 1; k <= 24; ++k) {
        term = term * scaled / static_cast<double>(k);
        result += term;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

}  // namespace

LatticeScreen lattice_screen(const AlmostAbelianData& d, double t0, double tolerance) {
    d.validate();
    if (t0 == 0.0) throw InvalidParams("t0 must be nonzero");
    Mat<Rat> B = d.B();
    int m = B.rows();
    Eigen::MatrixXd Bd(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) Bd(i, j) = B(i, j).get_d();
    Eigen::MatrixXd E = expm(t0 * Bd);
    // Faddeev-LeVerrier: coefficients of det(xI - E).
    LatticeScreen out;
    out.t0 = t0;
    out.char_poly.assign(m + 1, 0.0);
    out.char_poly[0] = 1.0;
    Eigen::MatrixXd Mk = Eigen::MatrixXd::Zero(m, m);
    double ck = 1.0;
    for (int k = 1; k <= m; ++k) {
        Mk = E * Mk + ck * Eigen::MatrixXd::Identity(m, m);
        ck = -(E * Mk).trace() / k;
        out.char_poly[k] = ck;
    }
    out.all_integral = true;
    for (double c : out.char_poly) {
        bool integral = std::abs(c - std::round(c)) <= tolerance;
        out.coefficient_integral.push_back(integral);
        out.all_integral = out.all_integral && integral;
    }
    return out;
}

AlmostAbelianData random_almost_abelian(SplitMix64& rng, int n, bool force_balanced) {
    AlmostAbelianData d;
    d.n = n;
    int m = d.n1();
    d.J1 = AlmostAbelianData::standard_J1(m);
    // A = realification of a random complex (m/2)x(m/2) matrix; commutes with
    // the standard J1 by construction.
    int half = m / 2;
    std::vector<std::vector<Scalar>> blocks(half, std::vector<Scalar>(half));
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) blocks[i][j] = rng.scalar(6);
    if (force_balanced) {
        // tr A = 2 sum Re(blocks_ii); cancel against the last diagonal block.
        Rat sum(0);
        for (int i = 0; i + 1 < half; ++i) sum += blocks[i][i].re;
        blocks[half - 1][half - 1].re = -sum;
    }
    d.A = Mat<Rat>(m, m);
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
            const Scalar& z = blocks[i][j];
            d.A(2 * i, 2 * j) = z.re;
            d.A(2 * i + 1, 2 * j + 1) = z.re;
            d.A(2 * i, 2 * j + 1) = -z.im;
            d.A(2 * i + 1, 2 * j) = z.im;
        }
    d.v.assign(m, Rat(0));
    if (!force_balanced) {
        d.a = rng.rat(6);
        for (int i = 0; i < m; ++i) d.v[i] = rng.rat(6);
    } else {
        d.a = rng.rat(6);
    }
    return d;
}

}  // namespace lcskt
