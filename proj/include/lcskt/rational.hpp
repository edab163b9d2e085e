#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lcskt {

// Exact rational arithmetic is delegated to GMP.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q" with optional leading sign.
std::optional<Rat> parse_rational(const std::string& text);

}  // namespace lcskt
