#include "lcskt/scalar.hpp"

#include <cctype>

#include "lcskt/errors.hpp"

namespace lcskt {

Scalar Scalar::inverse() const {
    Rat n = norm();
    if (lcskt::is_zero(n)) throw SingularMatrix();
    return Scalar(re / n, -im / n);
}

std::string to_string(const Scalar& z) {
    if (z.is_real()) return z.re.get_str();
    return "(" + z.re.get_str() + "," + z.im.get_str() + ")";
}

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-' || text[pos] == '+') {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return std::nullopt;
    std::string num, den;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num += text[pos++];
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den += text[pos++];
        if (den.empty()) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    if (!den.empty() && Rat(den) == 0) return std::nullopt;
    Rat r(num + (den.empty() ? "" : "/" + den));
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

}  // namespace lcskt
