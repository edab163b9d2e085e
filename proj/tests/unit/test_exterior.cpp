#include "doctest.h"

#include "lcskt/catalog.hpp"
#include "lcskt/dsl.hpp"
#include "lcskt/lie_algebra.hpp"
#include "lcskt/prng.hpp"
#include "lcskt/quadratic.hpp"

using namespace lcskt;

namespace {

// Independent route for the differential: the invariant formula
//   d beta(X_0..X_k) = sum_{i<j} (-1)^(i+j) beta([X_i,X_j], X_0..^i..^j..X_k)
// evaluated on basis tuples; checks the Leibniz implementation.
Scalar d_by_invariant_formula(const LieAlgebra& g, const KForm& beta, const std::vector<int>& tuple) {
    int k = static_cast<int>(tuple.size());
    Scalar total(0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<std::vector<Scalar>> args;
            args.push_back(g.bracket_basis(tuple[i], tuple[j]));
            for (int t = 0; t < k; ++t) {
                if (t == i || t == j) continue;
                std::vector<Scalar> e(g.dim(), Scalar(0));
                e[tuple[t] - 1] = Scalar(1);
                args.push_back(std::move(e));
            }
            Scalar val = beta.evaluate(args);
            if ((i + j) % 2 == 1) val = -val;
            total += val;
        }
    return total;
}

KForm random_form(SplitMix64& rng, int dim, int degree, int terms = 4) {
    KForm f(dim, degree);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx;
        while (static_cast<int>(idx.size()) < degree) {
            int i = static_cast<int>(rng.int_in(1, dim));
            bool fresh = true;
            for (int v : idx) fresh = fresh && v != i;
            if (fresh) idx.push_back(i);
        }
        f += KForm::monomial(dim, idx, Scalar(rng.rat(8)));
    }
    return f;
}

std::vector<LieAlgebra> sample_algebras() {
    std::vector<LieAlgebra> out;
    out.push_back(LieAlgebra::abelian(4));
    out.push_back(catalog_get("h8").algebra);
    out.push_back(catalog_get("h16").algebra);
    out.push_back(catalog_get("l23_0").algebra);
    ParamMap l8p{{"p", Scalar(4)}, {"q", Scalar(-1)}, {"s", Scalar(-1)}};
    out.push_back(catalog_get("l8", l8p).algebra);
    return out;
}

}  // namespace

TEST_CASE("mask utilities") {
    CHECK(mask_degree(mask_from_indices({1, 3, 6})) == 3);
    CHECK(wedge_sign(mask_from_indices({1}), mask_from_indices({2})) == 1);
    CHECK(wedge_sign(mask_from_indices({2}), mask_from_indices({1})) == -1);
    CHECK(wedge_sign(mask_from_indices({1, 2}), mask_from_indices({1})) == 0);
    CHECK(wedge_sign(mask_from_indices({5}), mask_from_indices({1, 2, 3, 4})) == 1);
    CHECK(mask_lex_less(mask_from_indices({1, 3}), mask_from_indices({2})));
    CHECK_FALSE(mask_lex_less(mask_from_indices({2}), mask_from_indices({1, 4})));
}

TEST_CASE("wedge basics") {
    KForm e1 = KForm::coframe(4, 1), e2 = KForm::coframe(4, 2);
    CHECK(e1.wedge(e2) == KForm::monomial(4, {1, 2}));
    KForm e12 = KForm::monomial(4, {1, 2});
    CHECK(e12.wedge(e12).is_zero());
    CHECK(e2.wedge(e1) == KForm::monomial(4, {1, 2}, Scalar(-1)));
}

TEST_CASE("l8 torsion equation wedge instance") {
    // alpha = -(2q+p) f6 against H = -2(q f123 + s f145) at p=4, q=s=-1.
    KForm alpha = KForm::monomial(6, {6}, Scalar(-2));
    KForm H = KForm::monomial(6, {1, 2, 3}, Scalar(2)) + KForm::monomial(6, {1, 4, 5}, Scalar(2));
    KForm expected = KForm::monomial(6, {1, 2, 3, 6}, Scalar(4)) +
                     KForm::monomial(6, {1, 4, 5, 6}, Scalar(4));
    CHECK(alpha.wedge(H) == expected);
}

TEST_CASE("interior product basics") {
    KForm e12 = KForm::monomial(4, {1, 2});
    std::vector<Scalar> e1(4, Scalar(0)), e3(4, Scalar(0));
    e1[0] = Scalar(1);
    e3[2] = Scalar(1);
    CHECK(e12.interior(e1) == KForm::coframe(4, 2));
    CHECK(e12.interior(e3).is_zero());
}

TEST_CASE("kernel of forms") {
    SUBCASE("volume form has trivial kernel") {
        KForm vol = KForm::monomial(5, {1, 2, 3, 4, 5});
        CHECK(kernel_of_form(vol).dim() == 0);
    }
    SUBCASE("zero form has full kernel") {
        CHECK(kernel_of_form(KForm(6, 3)).dim() == 6);
    }
    SUBCASE("H = e136 on a 6-dim coframe") {
        KForm H = KForm::monomial(6, {1, 3, 6});
        Subspace ker = kernel_of_form(H);
        CHECK(ker.dim() == 3);
        std::vector<Scalar> e2(6, Scalar(0)), e4(6, Scalar(0)), e5(6, Scalar(0));
        e2[1] = Scalar(1);
        e4[3] = Scalar(1);
        e5[4] = Scalar(1);
        CHECK(ker.contains(e2));
        CHECK(ker.contains(e4));
        CHECK(ker.contains(e5));
        CHECK(H.interior(e4).is_zero());
        // rank-nullity against the contraction map
        CHECK(ker.dim() + (6 - ker.dim()) == 6);
    }
}

TEST_CASE("kernel rank-nullity against the contraction matrix") {
    SplitMix64 rng(6006);
    for (int rep = 0; rep < 10; ++rep) {
        int dim = 6;
        KForm beta = random_form(rng, dim, 3);
        Subspace ker = kernel_of_form(beta);
        for (const auto& v : ker.basis) CHECK(beta.interior(v).is_zero());
        // contraction map X -> i_X beta as an explicit matrix
        std::map<Mask, int> row_of;
        std::vector<KForm> cols;
        for (int j = 1; j <= dim; ++j) {
            std::vector<Scalar> e(dim, Scalar(0));
            e[j - 1] = Scalar(1);
            cols.push_back(beta.interior(e));
            for (const auto& [m, c] : cols.back().terms())
                if (!row_of.count(m)) {
                    int next = static_cast<int>(row_of.size());
                    row_of[m] = next;
                }
        }
        Mat<Scalar> contraction(std::max<int>(1, static_cast<int>(row_of.size())), dim);
        for (int j = 0; j < dim; ++j)
            for (const auto& [m, c] : cols[j].terms()) contraction(row_of[m], j) = c;
        CHECK(ker.dim() + contraction.rank() == dim);
    }
}

TEST_CASE("validation") {
    SUBCASE("abelian is a Lie algebra") { CHECK(LieAlgebra::abelian(5).validate().ok); }
    SUBCASE("h16 is a Lie algebra") { CHECK(catalog_get("h16").algebra.validate().ok); }
    SUBCASE("perturbed 3-dim constants violate Jacobi") {
        // Brute-force search: de3 = e12, de2 = e13 + c e23 fails d^2 = 0 for
        // every nonzero small integer c.
        int witnesses = 0;
        for (int c = -3; c <= 3; ++c) {
            std::vector<KForm> d1(3, KForm(3, 2));
            d1[2] = KForm::monomial(3, {1, 2});
            d1[1] = KForm::monomial(3, {1, 3}) + KForm::monomial(3, {2, 3}, Scalar(c));
            LieAlgebra g = LieAlgebra::from_differentials(d1);
            ValidationReport r = g.validate();
            if (c == 0) {
                CHECK(r.ok);
            } else {
                CHECK_FALSE(r.ok);
                CHECK(r.i == 1);
                CHECK(r.j == 2);
                CHECK(r.k == 3);
                ++witnesses;
            }
        }
        CHECK(witnesses == 6);
        std::vector<KForm> d1(3, KForm(3, 2));
        d1[2] = KForm::monomial(3, {1, 2});
        d1[1] = KForm::monomial(3, {1, 3}) + KForm::monomial(3, {2, 3});
        CHECK_THROWS_AS(LieAlgebra::from_differentials(d1).require_valid(), JacobiViolation);
    }
}

TEST_CASE("coframe differentials of catalog algebras") {
    LieAlgebra h8 = catalog_get("h8").algebra;
    CHECK(h8.coframe_differential(6) == KForm::monomial(6, {1, 2}));
    for (int k = 1; k <= 5; ++k) CHECK(h8.coframe_differential(k).is_zero());
    CHECK(h8.d(KForm::constant(6, Scalar(7))).is_zero());
    CHECK(h8.d(KForm::coframe(6, 6)) == KForm::monomial(6, {1, 2}));
}

TEST_CASE("lower central series and unimodularity") {
    CHECK(LieAlgebra::abelian(6).lower_central_series_dims() == std::vector<int>{6, 0});
    CHECK(LieAlgebra::abelian(6).nilpotency_step() == 1);
    CHECK(catalog_get("h8").algebra.nilpotency_step() == 2);
    CHECK(catalog_get("h16").algebra.nilpotency_step() == 3);
    CHECK(catalog_get("h16").algebra.lower_central_series_dims() == std::vector<int>{6, 3, 2, 0});
    CHECK(catalog_get("h8").algebra.is_unimodular());
    CHECK(catalog_get("h16").algebra.is_unimodular());
    CHECK_FALSE(catalog_get("l23_0").algebra.nilpotency_step().has_value());
    CHECK(catalog_get("l23_0").algebra.is_unimodular());

    ParamMap uni{{"p", Scalar(4)}, {"q", Scalar(-1)}, {"s", Scalar(-1)}};
    CHECK(catalog_get("l8", uni).algebra.is_unimodular());  // s = -(p+2q)/2
    ParamMap notuni{{"p", Scalar(1)}, {"q", Scalar(1)}, {"s", Scalar(1)}};
    CHECK_FALSE(catalog_get("l8", notuni).algebra.is_unimodular());
}

TEST_CASE("d squares to zero and matches the invariant formula") {
    SplitMix64 rng(2024);
    for (const LieAlgebra& g : sample_algebras()) {
        for (int rep = 0; rep < 8; ++rep) {
            int degree = static_cast<int>(rng.int_in(1, 3));
            KForm beta = random_form(rng, g.dim(), degree);
            CHECK(g.d(g.d(beta)).is_zero());
            // spot-check d against the evaluation formula on a few tuples
            KForm dbeta = g.d(beta);
            for (int probe = 0; probe < 4; ++probe) {
                std::vector<int> tuple;
                while (static_cast<int>(tuple.size()) < degree + 1) {
                    int i = static_cast<int>(rng.int_in(1, g.dim()));
                    bool fresh = true;
                    for (int v : tuple) fresh = fresh && v != i;
                    if (fresh) tuple.push_back(i);
                }
                std::vector<std::vector<Scalar>> args;
                for (int i : tuple) {
                    std::vector<Scalar> e(g.dim(), Scalar(0));
                    e[i - 1] = Scalar(1);
                    args.push_back(std::move(e));
                }
                CHECK(dbeta.evaluate(args) == d_by_invariant_formula(g, beta, tuple));
            }
        }
    }
}

TEST_CASE("Leibniz rule") {
    SplitMix64 rng(77);
    for (const LieAlgebra& g : sample_algebras()) {
        for (int rep = 0; rep < 10; ++rep) {
            int p = static_cast<int>(rng.int_in(1, 2));
            int q = static_cast<int>(rng.int_in(1, 2));
            KForm beta = random_form(rng, g.dim(), p);
            KForm gamma = random_form(rng, g.dim(), q);
            KForm lhs = g.d(beta.wedge(gamma));
            KForm rhs = g.d(beta).wedge(gamma);
            KForm second = beta.wedge(g.d(gamma));
            if (p % 2 == 1) second = -second;
            rhs += second;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("wedge graded commutativity and associativity") {
    SplitMix64 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        int dim = 6;
        int p = static_cast<int>(rng.int_in(1, 2));
        int q = static_cast<int>(rng.int_in(1, 2));
        int r = static_cast<int>(rng.int_in(1, 2));
        KForm a = random_form(rng, dim, p), b = random_form(rng, dim, q), c = random_form(rng, dim, r);
        KForm ab = a.wedge(b), ba = b.wedge(a);
        if ((p * q) % 2 == 1) ba = -ba;
        CHECK(ab == ba);
        CHECK(a.wedge(b.wedge(c)) == (a.wedge(b)).wedge(c));
    }
}

TEST_CASE("interior product is an antiderivation with square zero") {
    SplitMix64 rng(5150);
    for (int rep = 0; rep < 12; ++rep) {
        int dim = 6;
        KForm a = random_form(rng, dim, 2), b = random_form(rng, dim, 2);
        std::vector<Scalar> X;
        for (int i = 0; i < dim; ++i) X.push_back(Scalar(rng.rat(6)));
        CHECK(a.interior(X).interior(X).is_zero());
        KForm lhs = a.wedge(b).interior(X);
        KForm rhs = a.interior(X).wedge(b) + a.wedge(b.interior(X));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lower central series is weakly decreasing and stabilizes") {
    for (const LieAlgebra& g : sample_algebras()) {
        std::vector<int> dims = g.lower_central_series_dims();
        REQUIRE(dims.size() >= 2);
        CHECK(dims.front() == g.dim());
        for (size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] <= dims[i - 1]);
        int last = dims.back();
        CHECK((last == 0 || last == dims[dims.size() - 2]));
    }
}

TEST_CASE("basis change") {
    LieAlgebra h16 = catalog_get("h16").algebra;
    SUBCASE("identity is neutral") {
        CHECK(apply_basis_change(h16, Mat<Scalar>::identity(6)).str() == h16.str());
    }
    SUBCASE("random invertible change preserves Jacobi") {
        SplitMix64 rng(31);
        Mat<Scalar> P(6, 6);
        do {
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) P(i, j) = Scalar(rng.rat(4));
        } while (P.det().is_zero());
        CHECK(apply_basis_change(h16, P).validate().ok);
    }
    SUBCASE("singular change is rejected") {
        Mat<Scalar> P(6, 6);
        CHECK_THROWS_AS(apply_basis_change(h16, P), SingularMatrix);
    }
}

TEST_CASE("Root2 field sanity") {
    Root2 x = Root2::sqrt2();
    CHECK(x * x == Root2(2));
    CHECK((Root2(1) + x) * (Root2(1) - x) == Root2(-1));
    CHECK(Root2(1) / x == x / Root2(2));
}
