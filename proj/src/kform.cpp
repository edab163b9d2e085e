#include "lcskt/kform.hpp"

#include <algorithm>
#include <sstream>

namespace lcskt {

Mask mask_from_indices(const std::vector<int>& indices) {
    Mask m = 0;
    for (int i : indices) {
        Mask bit = static_cast<Mask>(1u << (i - 1));
        if (i < 1 || i > 16 || (m & bit)) throw Error("bad index tuple");
        m |= bit;
    }
    return m;
}

Mask mask_from_indices(std::initializer_list<int> indices) {
    return mask_from_indices(std::vector<int>(indices));
}

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 16; ++i)
        if (m & (1u << i)) out.push_back(i + 1);
    return out;
}

int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    // Count pairs (i in a, j in b) with j < i.
    int inversions = 0;
    for (int i = 0; i < 16; ++i) {
        if (!(a & (1u << i))) continue;
        inversions += std::popcount(static_cast<unsigned>(b & ((1u << i) - 1)));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

bool mask_lex_less(Mask a, Mask b) {
    std::vector<int> ia = mask_indices(a), ib = mask_indices(b);
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

KForm KForm::monomial(int dim, const std::vector<int>& indices, const Scalar& c) {
    KForm f(dim, static_cast<int>(indices.size()));
    for (int i : indices)
        if (i < 1 || i > dim) throw Error("index exceeds coframe dimension");
    Mask sorted = mask_from_indices(indices);
    // Caller may pass an unsorted tuple; fold the sorting sign into c.
    std::vector<int> v = indices;
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) {
                std::swap(v[i], v[j]);
                sign = -sign;
            }
    Scalar coeff = (sign > 0) ? c : -c;
    if (!coeff.is_zero()) f.terms_.emplace(sorted, coeff);
    return f;
}

KForm KForm::constant(int dim, const Scalar& c) {
    KForm f(dim, 0);
    if (!c.is_zero()) f.terms_.emplace(Mask{0}, c);
    return f;
}

bool KForm::is_real() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

Scalar KForm::coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar KForm::coefficient(const std::vector<int>& indices) const {
    return coefficient(mask_from_indices(indices));
}

void KForm::set_term(Mask m, const Scalar& c) {
    terms_.erase(m);
    if (!c.is_zero()) terms_.emplace(m, c);
}

KForm KForm::operator-() const {
    KForm f(dim_, degree_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
}

KForm& KForm::operator+=(const KForm& o) {
    if (dim_ != o.dim_) throw AmbientMismatch();
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero()) throw Error("degree mismatch in sum");
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_) detail::add_term(terms_, m, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm KForm::scaled(const Scalar& c) const {
    KForm f(dim_, degree_);
    if (c.is_zero()) return f;
    for (const auto& [m, k] : terms_) f.terms_.emplace(m, k * c);
    return f;
}

KForm KForm::wedge(const KForm& o) const {
    if (dim_ != o.dim_) throw AmbientMismatch();
    KForm f(dim_, degree_ + o.degree_);
    f.terms_ = detail::wedge_maps(terms_, o.terms_);
    return f;
}

KForm KForm::interior(const std::vector<Scalar>& X) const {
    if (static_cast<int>(X.size()) != dim_) throw AmbientMismatch();
    KForm f(dim_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        std::vector<int> idx = mask_indices(m);
        for (size_t t = 0; t < idx.size(); ++t) {
            const Scalar& x = X[idx[t] - 1];
            if (x.is_zero()) continue;
            Scalar coeff = c * x;
            if (t % 2 == 1) coeff = -coeff;
            detail::add_term(f.terms_, static_cast<Mask>(m & ~(1u << (idx[t] - 1))), coeff);
        }
    }
    return f;
}

KForm KForm::substitute(const Mat<Scalar>& rows) const {
    if (rows.rows() != dim_) throw AmbientMismatch();
    KForm f(rows.cols(), degree_);
    f.terms_ = detail::substitute_map(terms_, rows);
    return f;
}

KForm KForm::conjugate() const {
    KForm f(dim_, degree_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, c.conj());
    return f;
}

KForm KForm::real_part() const {
    KForm f(dim_, degree_);
    for (const auto& [m, c] : terms_)
        if (!lcskt::is_zero(c.re)) f.terms_.emplace(m, Scalar(c.re));
    return f;
}

KForm KForm::imag_part() const {
    KForm f(dim_, degree_);
    for (const auto& [m, c] : terms_)
        if (!lcskt::is_zero(c.im)) f.terms_.emplace(m, Scalar(c.im));
    return f;
}

Scalar KForm::evaluate(const std::vector<std::vector<Scalar>>& args) const {
    if (static_cast<int>(args.size()) != degree_) throw Error("evaluate: wrong number of arguments");
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
        std::vector<int> idx = mask_indices(m);
        Mat<Scalar> minor(degree_, degree_);
        for (int r = 0; r < degree_; ++r)
            for (int col = 0; col < degree_; ++col) minor(r, col) = args[col][idx[r] - 1];
        total += c * minor.det();
    }
    return total;
}

std::string KForm::str() const {
    if (terms_.empty()) return "0";
    std::vector<Mask> order;
    order.reserve(terms_.size());
    for (const auto& [m, c] : terms_) order.push_back(m);
    std::sort(order.begin(), order.end(), mask_lex_less);
    std::ostringstream out;
    bool first = true;
    for (Mask m : order) {
        const Scalar& c = terms_.at(m);
        std::string mono;
        for (int i : mask_indices(m)) mono += static_cast<char>('0' + i);
        if (c.is_real()) {
            Rat mag = abs(c.re);
            out << (sgn(c.re) < 0 ? "-" : (first ? "" : "+"));
            if (mono.empty())
                out << mag.get_str();
            else if (mag == 1)
                out << mono;
            else
                out << mag.get_str() << "*" << mono;
        } else {
            if (!first) out << "+";
            out << "(" << c.re.get_str() << "," << c.im.get_str() << ")";
            if (!mono.empty()) out << "*" << mono;
        }
        first = false;
    }
    return out.str();
}

std::vector<Scalar> one_form_coefficients(const KForm& alpha) {
    if (alpha.degree() != 1) throw Error("not a 1-form");
    std::vector<Scalar> out(alpha.dim(), Scalar(0));
    for (const auto& [m, c] : alpha.terms()) out[mask_indices(m)[0] - 1] = c;
    return out;
}

KForm one_form_from_coefficients(int dim, const std::vector<Scalar>& coeffs) {
    KForm f(dim, 1);
    for (int i = 0; i < dim; ++i) f.set_term(static_cast<Mask>(1u << i), coeffs[i]);
    return f;
}

}  // namespace lcskt
