#include "lcskt/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace lcskt {

LieAlgebra LieAlgebra::abelian(int dim) {
    std::vector<KForm> d1;
    d1.reserve(dim);
    for (int k = 0; k < dim; ++k) d1.emplace_back(dim, 2);
    return LieAlgebra(dim, std::move(d1));
}

LieAlgebra LieAlgebra::from_differentials(std::vector<KForm> differentials) {
    int dim = static_cast<int>(differentials.size());
    if (dim < 1 || dim > 9) throw Error("dimension out of supported range 1..9");
    for (const auto& f : differentials) {
        if (f.dim() != dim) throw AmbientMismatch();
        if (!f.is_zero() && f.degree() != 2) throw Error("coframe differential must be a 2-form");
        if (!f.is_real()) throw Error("structure constants must be real");
    }
    return LieAlgebra(dim, std::move(differentials));
}

LieAlgebra LieAlgebra::from_structure_constants(
    int dim, const std::vector<std::tuple<int, int, int, Rat>>& constants) {
    std::vector<KForm> d1(dim, KForm(dim, 2));
    for (const auto& [i, j, k, c] : constants) {
        if (i >= j) throw Error("structure constants expected with i < j");
        // de^k(e_i,e_j) = -c_ij^k
        KForm add = KForm::monomial(dim, {i, j}, Scalar(-c));
        d1[k - 1] += add;
    }
    return LieAlgebra(dim, std::move(d1));
}

std::vector<Scalar> LieAlgebra::bracket_basis(int i, int j) const {
    std::vector<Scalar> v(dim_, Scalar(0));
    if (i == j) return v;
    Mask m = mask_from_indices({std::min(i, j), std::max(i, j)});
    int sign = i < j ? 1 : -1;
    for (int k = 1; k <= dim_; ++k) {
        Scalar c = -d1_[k - 1].coefficient(m);
        if (sign < 0) c = -c;
        v[k - 1] = c;
    }
    return v;
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& X,
                                        const std::vector<Scalar>& Y) const {
    std::vector<Scalar> out(dim_, Scalar(0));
    for (int i = 1; i <= dim_; ++i) {
        if (X[i - 1].is_zero()) continue;
        for (int j = 1; j <= dim_; ++j) {
            if (j == i || Y[j - 1].is_zero()) continue;
            Scalar c = X[i - 1] * Y[j - 1];
            std::vector<Scalar> b = bracket_basis(i, j);
            for (int k = 0; k < dim_; ++k) out[k] += c * b[k];
        }
    }
    return out;
}

KForm LieAlgebra::d(const KForm& beta) const {
    if (beta.dim() != dim_) throw AmbientMismatch();
    KForm out(dim_, beta.degree() + 1);
    if (beta.degree() == 0) return out;
    for (const auto& [m, c] : beta.terms()) {
        std::vector<int> idx = mask_indices(m);
        // d(e^{i1...ik}) = sum_t (-1)^(t-1) e^{i1..} ^ de^{it} ^ {..ik}
        for (size_t t = 0; t < idx.size(); ++t) {
            const KForm& dit = d1_[idx[t] - 1];
            if (dit.is_zero()) continue;
            Mask rest = static_cast<Mask>(m & ~(1u << (idx[t] - 1)));
            for (const auto& [dm, dc] : dit.terms()) {
                int s = wedge_sign(dm, rest);
                if (s == 0) continue;
                // Leibniz sign (-1)^t from passing d over t one-forms; the
                // degree-2 replacement commutes freely to the front, leaving
                // the sorting sign s for dm ^ rest.
                Scalar coeff = c * dc;
                if ((t % 2) == 1) coeff = -coeff;
                if (s < 0) coeff = -coeff;
                KForm term(dim_, beta.degree() + 1);
                term.set_term(static_cast<Mask>(dm | rest), coeff);
                out += term;
            }
        }
    }
    return out;
}

ValidationReport LieAlgebra::validate() const {
    for (int k = 1; k <= dim_; ++k) {
        KForm dd = d(d1_[k - 1]);
        if (!dd.is_zero()) {
            std::vector<int> idx = mask_indices(dd.terms().begin()->first);
            return ValidationReport{false, idx[0], idx[1], idx[2]};
        }
    }
    return ValidationReport{};
}

void LieAlgebra::require_valid() const {
    ValidationReport r = validate();
    if (!r.ok) throw JacobiViolation(r.i, r.j, r.k);
}

namespace {

// Exact span dimension, and a basis of the span as row-reduced vectors.
std::vector<std::vector<Scalar>> row_space_basis(const std::vector<std::vector<Scalar>>& vecs,
                                                 int dim) {
    if (vecs.empty()) return {};
    Mat<Scalar> m(static_cast<int>(vecs.size()), dim);
    for (size_t r = 0; r < vecs.size(); ++r)
        for (int c = 0; c < dim; ++c) m(static_cast<int>(r), c) = vecs[r][c];
    std::vector<int> pivots = m.rref();
    std::vector<std::vector<Scalar>> basis;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Scalar> v(dim);
        for (int c = 0; c < dim; ++c) v[c] = m(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<int> LieAlgebra::lower_central_series_dims() const {
    std::vector<int> dims{dim_};
    // Current term as a spanning set of vectors.
    std::vector<std::vector<Scalar>> current;
    for (int i = 1; i <= dim_; ++i) {
        std::vector<Scalar> e(dim_, Scalar(0));
        e[i - 1] = Scalar(1);
        current.push_back(std::move(e));
    }
    while (true) {
        std::vector<std::vector<Scalar>> next_span;
        for (const auto& x : current)
            for (int j = 1; j <= dim_; ++j) {
                std::vector<Scalar> e(dim_, Scalar(0));
                e[j - 1] = Scalar(1);
                std::vector<Scalar> b = bracket(x, e);
                bool zero = true;
                for (const auto& s : b) zero = zero && s.is_zero();
                if (!zero) next_span.push_back(std::move(b));
            }
        std::vector<std::vector<Scalar>> next = row_space_basis(next_span, dim_);
        int d = static_cast<int>(next.size());
        dims.push_back(d);
        if (d == 0 || d == dims[dims.size() - 2]) return dims;
        current = std::move(next);
    }
}

std::optional<int> LieAlgebra::nilpotency_step() const {
    std::vector<int> dims = lower_central_series_dims();
    if (dims.back() != 0) return std::nullopt;
    return static_cast<int>(dims.size()) - 1;
}

bool LieAlgebra::is_unimodular() const {
    // tr ad_{e_i} = sum_j c_ij^j
    for (int i = 1; i <= dim_; ++i) {
        Scalar tr(0);
        for (int j = 1; j <= dim_; ++j) {
            if (j == i) continue;
            tr += bracket_basis(i, j)[j - 1];
        }
        if (!tr.is_zero()) return false;
    }
    return true;
}

Mat<Scalar> LieAlgebra::ad(const std::vector<Scalar>& X) const {
    Mat<Scalar> m(dim_, dim_);
    for (int j = 1; j <= dim_; ++j) {
        std::vector<Scalar> e(dim_, Scalar(0));
        e[j - 1] = Scalar(1);
        std::vector<Scalar> b = bracket(X, e);
        for (int i = 0; i < dim_; ++i) m(i, j - 1) = b[i];
    }
    return m;
}

std::string LieAlgebra::str() const {
    std::ostringstream out;
    out << "(";
    for (int k = 1; k <= dim_; ++k) {
        if (k > 1) out << ",";
        out << d1_[k - 1].str();
    }
    out << ")";
    return out.str();
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (basis.empty()) {
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    }
    Mat<Scalar> m(static_cast<int>(basis.size()) + 1, ambient_dim);
    for (size_t r = 0; r < basis.size(); ++r)
        for (int c = 0; c < ambient_dim; ++c) m(static_cast<int>(r), c) = basis[r][c];
    for (int c = 0; c < ambient_dim; ++c) m(static_cast<int>(basis.size()), c) = v[c];
    return m.rank() == static_cast<int>(basis.size());
}

Subspace kernel_of_form(const KForm& beta) {
    int dim = beta.dim();
    // Rows: coefficients of interior(e_j, beta) per (k-1)-monomial; columns: j.
    std::vector<KForm> contractions;
    for (int j = 1; j <= dim; ++j) {
        std::vector<Scalar> e(dim, Scalar(0));
        e[j - 1] = Scalar(1);
        contractions.push_back(beta.interior(e));
    }
    std::map<Mask, int> row_of;
    for (const auto& f : contractions)
        for (const auto& [m, c] : f.terms())
            if (!row_of.count(m)) {
                int next = static_cast<int>(row_of.size());
                row_of[m] = next;
            }
    Mat<Scalar> sys(static_cast<int>(row_of.size()), dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& [m, c] : contractions[j].terms()) sys(row_of[m], j) = c;
    Subspace s;
    s.ambient_dim = dim;
    if (sys.rows() == 0) {
        for (int i = 1; i <= dim; ++i) {
            std::vector<Scalar> e(dim, Scalar(0));
            e[i - 1] = Scalar(1);
            s.basis.push_back(std::move(e));
        }
        return s;
    }
    for (auto& v : sys.kernel()) s.basis.push_back(std::move(v));
    return s;
}

std::vector<KForm> closed_one_forms(const LieAlgebra& g) {
    int dim = g.dim();
    std::map<Mask, int> row_of;
    for (int a = 1; a <= dim; ++a)
        for (const auto& [m, c] : g.coframe_differential(a).terms())
            if (!row_of.count(m)) {
                int next = static_cast<int>(row_of.size());
                row_of[m] = next;
            }
    Mat<Scalar> system(std::max<int>(1, static_cast<int>(row_of.size())), dim);
    for (int a = 1; a <= dim; ++a)
        for (const auto& [m, c] : g.coframe_differential(a).terms()) system(row_of[m], a - 1) = c;
    std::vector<KForm> out;
    for (auto& v : system.kernel()) out.push_back(one_form_from_coefficients(dim, v));
    return out;
}

LieAlgebra apply_basis_change(const LieAlgebra& g, const Mat<Scalar>& P) {
    std::vector<detail::FormMap<Scalar>> diffs;
    for (int k = 1; k <= g.dim(); ++k) diffs.push_back(g.coframe_differential(k).terms());
    std::vector<detail::FormMap<Scalar>> out = transform_differentials(diffs, P);
    std::vector<KForm> d1;
    for (int k = 0; k < g.dim(); ++k) {
        KForm f(g.dim(), 2);
        for (const auto& [m, c] : out[k]) f.set_term(m, c);
        d1.push_back(std::move(f));
    }
    return LieAlgebra::from_differentials(std::move(d1));
}

}  // namespace lcskt
