#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcskt/kform.hpp"

namespace lcskt {

struct ValidationReport {
    bool ok = true;
    // First violating basis triple when !ok.
    int i = 0, j = 0, k = 0;
};

// A real Lie algebra given by exact structure constants, stored as the
// differentials of the coframe: de^k determines c via de^k(e_i,e_j) = -c_ij^k.
// Immutable after construction; all operations are pure.
class LieAlgebra {
  public:
    LieAlgebra() : dim_(0) {}  // empty placeholder; not a usable algebra

    static LieAlgebra abelian(int dim);
    // differentials[k] = de^(k+1), a real 2-form over the same coframe.
    static LieAlgebra from_differentials(std::vector<KForm> differentials);
    // c[{i,j,k}] with i<j meaning [e_i,e_j] = sum_k c_ij^k e_k.
    static LieAlgebra from_structure_constants(
        int dim, const std::vector<std::tuple<int, int, int, Rat>>& constants);

    int dim() const { return dim_; }
    const KForm& coframe_differential(int k) const { return d1_[k - 1]; }

    // [e_i, e_j] as a coordinate vector.
    std::vector<Scalar> bracket_basis(int i, int j) const;
    std::vector<Scalar> bracket(const std::vector<Scalar>& X, const std::vector<Scalar>& Y) const;

    // Chevalley-Eilenberg differential, extended from the coframe by the
    // graded Leibniz rule.  d(constant) = 0.
    KForm d(const KForm& beta) const;

    // ok iff d(de^k) = 0 for every coframe element.
    ValidationReport validate() const;
    void require_valid() const;  // throws JacobiViolation

    // Dimensions of g = g^0 >= [g,g] = g^1 >= ... until stabilization; the
    // trailing entry repeats the stable dimension exactly once.
    std::vector<int> lower_central_series_dims() const;
    // Nilpotency step, or nullopt if the series stabilizes above zero.
    std::optional<int> nilpotency_step() const;

    bool is_unimodular() const;

    // ad_X as a matrix (columns = images of basis vectors).
    Mat<Scalar> ad(const std::vector<Scalar>& X) const;

    std::string str() const;  // canonical DSL tuple

  private:
    LieAlgebra(int dim, std::vector<KForm> d1) : dim_(dim), d1_(std::move(d1)) {}
    int dim_;
    std::vector<KForm> d1_;
};

// {X : interior(X, beta) = 0} as an exact null space; basis vectors are the
// canonical kernel basis of the contraction matrix.
struct Subspace {
    int ambient_dim = 0;
    std::vector<std::vector<Scalar>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const std::vector<Scalar>& v) const;
};

Subspace kernel_of_form(const KForm& beta);

// Canonical basis of {alpha : d alpha = 0} among 1-forms.
std::vector<KForm> closed_one_forms(const LieAlgebra& g);

// New coframe E^a = sum_b P(a-1,b-1) e^b; structure constants transform
// covariantly.  Throws SingularMatrix.
LieAlgebra apply_basis_change(const LieAlgebra& g, const Mat<Scalar>& P);

// Same transformation over an arbitrary exact field; used to verify the
// basis changes with sqrt(2) entries.  differentials[k] maps monomial masks to
// coefficients of de^(k+1).
template <class F>
std::vector<detail::FormMap<F>> transform_differentials(
    const std::vector<detail::FormMap<F>>& differentials, const Mat<F>& P) {
    auto inv = P.inverse();
    if (!inv) throw SingularMatrix();
    int dim = P.rows();
    std::vector<detail::FormMap<F>> out(dim);
    for (int a = 0; a < dim; ++a) {
        detail::FormMap<F> combined;
        for (int b = 0; b < dim; ++b) {
            const F& c = P(a, b);
            if (is_zero_elem(c)) continue;
            for (const auto& [m, coeff] : differentials[b]) detail::add_term(combined, m, F(c * coeff));
        }
        out[a] = detail::substitute_map(combined, *inv);
    }
    return out;
}

}  // namespace lcskt
