#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "lcskt/errors.hpp"
#include "lcskt/linalg.hpp"
#include "lcskt/scalar.hpp"

namespace lcskt {

// A strictly increasing index tuple over coframe indices 1..dim (dim <= 9)
// is stored as a bitmask: bit j-1 set  <=>  index j present.
using Mask = std::uint16_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

Mask mask_from_indices(const std::vector<int>& indices);
Mask mask_from_indices(std::initializer_list<int> indices);
std::vector<int> mask_indices(Mask m);

// Sign of sorting the concatenation (a, b); 0 when the masks intersect.
int wedge_sign(Mask a, Mask b);

// Lexicographic order on the underlying increasing tuples (not on the raw
// mask values); used for canonical printing.
bool mask_lex_less(Mask a, Mask b);

namespace detail {

template <class F>
using FormMap = std::map<Mask, F>;

template <class F>
void add_term(FormMap<F>& m, Mask mask, const F& c) {
    if (is_zero_elem(c)) return;
    auto [it, inserted] = m.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (is_zero_elem(it->second)) m.erase(it);
    }
}

template <class F>
FormMap<F> wedge_maps(const FormMap<F>& a, const FormMap<F>& b) {
    FormMap<F> out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            F c = ca * cb;
            if (s < 0) c = -c;
            add_term(out, static_cast<Mask>(ma | mb), c);
        }
    return out;
}

// Replaces every coframe element: old index a (1-based) becomes the 1-form
// sum_b rows(a-1, b) * new^(b+1), and expands the wedge products.
template <class F>
FormMap<F> substitute_map(const FormMap<F>& form, const Mat<F>& rows) {
    FormMap<F> out;
    for (const auto& [mask, coeff] : form) {
        FormMap<F> acc;
        acc.emplace(Mask{0}, coeff);
        for (int idx : mask_indices(mask)) {
            FormMap<F> line;
            for (int b = 0; b < rows.cols(); ++b) {
                const F& c = rows(idx - 1, b);
                if (!is_zero_elem(c)) line.emplace(static_cast<Mask>(1u << b), c);
            }
            acc = wedge_maps(acc, line);
            if (acc.empty()) break;
        }
        for (const auto& [m, c] : acc) add_term(out, m, c);
    }
    return out;
}

}  // namespace detail

// Exact alternating k-form over a coframe of the stated dimension.  Terms map
// strictly increasing index tuples to Q(i) coefficients; zero coefficients are
// never stored, so equality is map equality.
class KForm {
  public:
    KForm() : dim_(0), degree_(0) {}
    KForm(int dim, int degree) : dim_(dim), degree_(degree) {}

    static KForm zero(int dim, int degree) { return KForm(dim, degree); }
    static KForm monomial(int dim, const std::vector<int>& indices, const Scalar& c = Scalar(1));
    static KForm coframe(int dim, int index) { return monomial(dim, {index}); }
    // Degree-0 form (a constant).
    static KForm constant(int dim, const Scalar& c);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;

    const std::map<Mask, Scalar>& terms() const { return terms_; }
    Scalar coefficient(Mask m) const;
    Scalar coefficient(const std::vector<int>& indices) const;
    void set_term(Mask m, const Scalar& c);

    KForm operator-() const;
    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    KForm scaled(const Scalar& c) const;
    friend bool operator==(const KForm& a, const KForm& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

    KForm wedge(const KForm& o) const;

    // Interior product with the coordinate vector X (contraction in the first
    // slot); an antiderivation of degree -1.
    KForm interior(const std::vector<Scalar>& X) const;

    // beta(J., ..., J.) for the linear map given row-wise: slot form e^a
    // becomes sum_b rows(a-1,b) e^(b+1).  Also serves realification and
    // complexification with rectangular matrices.
    KForm substitute(const Mat<Scalar>& rows) const;

    KForm conjugate() const;
    KForm real_part() const;
    KForm imag_part() const;

    // Full multilinear evaluation on coordinate vectors; exact.
    Scalar evaluate(const std::vector<std::vector<Scalar>>& args) const;

    // Canonical string, stable term order (lexicographic index tuples).
    std::string str() const;

  private:
    int dim_;
    int degree_;
    std::map<Mask, Scalar> terms_;
};

// Coefficient vector of a 1-form over the coframe, and back.
std::vector<Scalar> one_form_coefficients(const KForm& alpha);
KForm one_form_from_coefficients(int dim, const std::vector<Scalar>& coeffs);

}  // namespace lcskt
