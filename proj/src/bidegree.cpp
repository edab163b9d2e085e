#include "lcskt/bidegree.hpp"

namespace lcskt {

ComplexCoframe::ComplexCoframe(const ComplexStructure& J) {
    int dim = J.dim();
    if (dim % 2 != 0) throw InvalidParams("complex coframe needs even real dimension");
    n_ = dim / 2;
    std::vector<std::vector<Scalar>> rows10 = J.coframe_10();
    if (static_cast<int>(rows10.size()) != n_) throw InvalidParams("J has wrong i-eigenspace rank");
    C_ = Mat<Scalar>(dim, dim);
    for (int j = 0; j < n_; ++j)
        for (int a = 0; a < dim; ++a) {
            C_(j, a) = rows10[j][a];
            C_(n_ + j, a) = rows10[j][a].conj();
        }
    auto inv = C_.inverse();
    if (!inv) throw InvalidParams("complex coframe is degenerate");
    Cinv_ = *inv;
}

KForm ComplexCoframe::to_complex(const KForm& real_form) const {
    return real_form.substitute(Cinv_);
}

KForm ComplexCoframe::to_real(const KForm& complex_form) const {
    return complex_form.substitute(C_);
}

std::pair<int, int> ComplexCoframe::bidegree_of(Mask m) const {
    int p = 0, q = 0;
    for (int i : mask_indices(m)) (i <= n_ ? p : q) += 1;
    return {p, q};
}

std::map<std::pair<int, int>, KForm> ComplexCoframe::split_complex(const KForm& form) const {
    std::map<std::pair<int, int>, KForm> out;
    for (const auto& [m, c] : form.terms()) {
        auto pq = bidegree_of(m);
        auto [it, inserted] = out.try_emplace(pq, KForm(form.dim(), form.degree()));
        KForm term(form.dim(), form.degree());
        term.set_term(m, c);
        it->second += term;
    }
    return out;
}

std::map<std::pair<int, int>, KForm> ComplexCoframe::split(const KForm& real_form) const {
    return split_complex(to_complex(real_form));
}

KForm ComplexCoframe::conjugate_complex(const KForm& form) const {
    KForm out(form.dim(), form.degree());
    for (const auto& [m, c] : form.terms()) {
        std::vector<int> mapped;
        for (int i : mask_indices(m)) mapped.push_back(i <= n_ ? i + n_ : i - n_);
        // mask_from_indices sorts implicitly; recover the reordering sign.
        int sign = 1;
        std::vector<int> v = mapped;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[i] > v[j]) {
                    std::swap(v[i], v[j]);
                    sign = -sign;
                }
        Scalar coeff = c.conj();
        if (sign < 0) coeff = -coeff;
        KForm term(form.dim(), form.degree());
        term.set_term(mask_from_indices(v), coeff);
        out += term;
    }
    return out;
}

KForm d_complex(const LieAlgebra& g, const ComplexCoframe& frame, const KForm& complex_form) {
    return frame.to_complex(g.d(frame.to_real(complex_form)));
}

// Sign convention: d^c = i(del - dbar), equivalently d^c beta = d beta(J.,J.,J.)
// on 2-forms.  This is the choice under which the closed-form dH identities
// and the bracket-trace torsion formula hold verbatim; see README.
KForm dc(const LieAlgebra& g, const ComplexStructure& J, const KForm& beta) {
    if (beta.degree() != 2) throw Error("dc implemented for 2-forms");
    KForm dbeta = g.d(beta);
    KForm route1 = J.pullback(dbeta);

    ComplexCoframe frame(J);
    KForm route2(beta.dim(), 3);
    for (const auto& [pq, piece] : frame.split(beta)) {
        KForm dpiece = d_complex(g, frame, piece);
        KForm del(beta.dim(), 3), dbar(beta.dim(), 3);
        for (const auto& [pq2, comp] : frame.split_complex(dpiece)) {
            if (pq2 == std::make_pair(pq.first + 1, pq.second)) del += comp;
            if (pq2 == std::make_pair(pq.first, pq.second + 1)) dbar += comp;
        }
        route2 += frame.to_real((del - dbar).scaled(Scalar::i()));
    }
    if (route1 != route2) throw RouteMismatch("dc pullback vs i(del-dbar): " + route1.str() + " vs " + route2.str());
    return route1;
}

}  // namespace lcskt
