#include "lcskt/complex_structure.hpp"

namespace lcskt {

ComplexStructure::ComplexStructure(Mat<Scalar> J) : J_(std::move(J)) {
    if (J_.rows() != J_.cols()) throw InvalidParams("J must be square");
    for (int i = 0; i < J_.rows(); ++i)
        for (int j = 0; j < J_.cols(); ++j)
            if (!J_(i, j).is_real()) throw InvalidParams("J must have real entries");
    Mat<Scalar> sq = J_ * J_;
    Mat<Scalar> minus_id = Mat<Scalar>::identity(J_.rows()).scaled(Scalar(-1));
    if (sq != minus_id) throw InvalidParams("J^2 != -Id");
}

ComplexStructure ComplexStructure::from_pairs(int dim,
                                              const std::vector<std::pair<int, int>>& pairs) {
    Mat<Scalar> J(dim, dim);
    for (auto [a, b] : pairs) {
        J(b - 1, a - 1) = Scalar(1);   // J e_a = e_b
        J(a - 1, b - 1) = Scalar(-1);  // J e_b = -e_a
    }
    return ComplexStructure(std::move(J));
}

ComplexStructure ComplexStructure::standard(int dim) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; 2 * j <= dim; ++j) pairs.emplace_back(2 * j - 1, 2 * j);
    return ComplexStructure::from_pairs(dim, pairs);
}

KForm ComplexStructure::pullback(const KForm& beta) const {
    // Slot form e^a becomes e^a o J = sum_b J(a,b) e^b.
    return beta.substitute(J_);
}

NijenhuisReport ComplexStructure::nijenhuis(const LieAlgebra& g) const {
    if (g.dim() != dim()) throw AmbientMismatch();
    NijenhuisReport report;
    int n = dim();
    std::vector<std::vector<Scalar>> Je(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> e(n, Scalar(0));
        e[i] = Scalar(1);
        Je[i] = apply(e);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<Scalar> ei(n, Scalar(0)), ej(n, Scalar(0));
            ei[i - 1] = Scalar(1);
            ej[j - 1] = Scalar(1);
            std::vector<Scalar> t1 = g.bracket(Je[i - 1], Je[j - 1]);
            std::vector<Scalar> t2 = apply(g.bracket(Je[i - 1], ej));
            std::vector<Scalar> t3 = apply(g.bracket(ei, Je[j - 1]));
            std::vector<Scalar> t4 = g.bracket(ei, ej);
            std::vector<Scalar> N(n, Scalar(0));
            bool zero = true;
            for (int k = 0; k < n; ++k) {
                N[k] = t1[k] - t2[k] - t3[k] - t4[k];
                zero = zero && N[k].is_zero();
            }
            if (!zero) report.values[{i, j}] = std::move(N);
        }
    return report;
}

ComplexStructureClass ComplexStructure::classify(const LieAlgebra& g) const {
    ComplexStructureClass out;
    int n = dim();
    out.abelian = true;
    out.bi_invariant = true;
    for (int i = 1; i <= n && (out.abelian || out.bi_invariant); ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            std::vector<Scalar> ei(n, Scalar(0)), ej(n, Scalar(0));
            ei[i - 1] = Scalar(1);
            ej[j - 1] = Scalar(1);
            std::vector<Scalar> Jei = apply(ei), Jej = apply(ej);
            std::vector<Scalar> lhs_ab = g.bracket(Jei, Jej);
            std::vector<Scalar> rhs_ab = g.bracket(ei, ej);
            std::vector<Scalar> lhs_bi = apply(g.bracket(ei, ej));
            std::vector<Scalar> rhs_bi = g.bracket(Jei, ej);
            for (int k = 0; k < n; ++k) {
                if (lhs_ab[k] != rhs_ab[k]) out.abelian = false;
                if (lhs_bi[k] != rhs_bi[k]) out.bi_invariant = false;
            }
        }
    return out;
}

std::vector<std::vector<Scalar>> ComplexStructure::coframe_10() const {
    int n = dim();
    // (J^t - i Id) v = 0 over Q(i).
    Mat<Scalar> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = J_(j, i);
            if (i == j) m(i, j) -= Scalar::i();
        }
    std::vector<std::vector<Scalar>> basis = m.kernel();
    // Monic normalization: leading coefficient 1.
    for (auto& v : basis) {
        for (const Scalar& c : v) {
            if (!c.is_zero()) {
                Scalar inv = c.inverse();
                for (auto& x : v) x *= inv;
                break;
            }
        }
    }
    return basis;
}

}  // namespace lcskt
