#pragma once

#include "lcskt/errors.hpp"
#include "lcskt/rational.hpp"

namespace lcskt {

// Element of Q(sqrt 2): a + b*sqrt(2).  Only the basis-change verifications
// need this field; the engine core stays over Q(i).
struct Root2 {
    Rat a, b;

    Root2() : a(0), b(0) {}
    Root2(int n) : a(n), b(0) {}  // NOLINT(google-explicit-constructor)
    Root2(Rat a_, Rat b_ = Rat(0)) : a(std::move(a_)), b(std::move(b_)) {}

    static Root2 sqrt2() { return Root2(Rat(0), Rat(1)); }

    bool is_zero() const { return lcskt::is_zero(a) && lcskt::is_zero(b); }

    Root2 operator-() const { return Root2(-a, -b); }
    Root2& operator+=(const Root2& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    Root2& operator-=(const Root2& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    Root2& operator*=(const Root2& o) {
        Rat na = a * o.a + 2 * b * o.b;
        Rat nb = a * o.b + b * o.a;
        a = std::move(na);
        b = std::move(nb);
        return *this;
    }
    Root2 inverse() const {
        Rat n = a * a - 2 * b * b;  // field norm; zero only for the zero element
        if (lcskt::is_zero(n)) throw SingularMatrix();
        return Root2(a / n, -b / n);
    }
    Root2& operator/=(const Root2& o) { return *this *= o.inverse(); }

    friend Root2 operator+(Root2 x, const Root2& y) { return x += y; }
    friend Root2 operator-(Root2 x, const Root2& y) { return x -= y; }
    friend Root2 operator*(Root2 x, const Root2& y) { return x *= y; }
    friend Root2 operator/(Root2 x, const Root2& y) { return x /= y; }
    friend bool operator==(const Root2& x, const Root2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Root2& x, const Root2& y) { return !(x == y); }
};

}  // namespace lcskt
