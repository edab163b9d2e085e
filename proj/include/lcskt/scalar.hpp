#pragma once

#include <string>

#include "lcskt/rational.hpp"

namespace lcskt {

// Element of Q(i): re + im*i with exact rational parts.  The coefficient
// field of the whole engine; decidable equality, no rounding anywhere.
struct Scalar {
    Rat re, im;

    Scalar() : re(0), im(0) {}
    Scalar(int n) : re(n), im(0) {}                       // NOLINT(google-explicit-constructor)
    Scalar(long n) : re(n), im(0) {}                      // NOLINT(google-explicit-constructor)
    Scalar(const Rat& r) : re(r), im(0) {}                // NOLINT(google-explicit-constructor)
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }

    bool is_zero() const { return lcskt::is_zero(re) && lcskt::is_zero(im); }
    bool is_real() const { return lcskt::is_zero(im); }

    Scalar conj() const { return Scalar(re, -im); }
    // |z|^2, exact.
    Rat norm() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rat r = re * o.re - im * o.im;
        Rat i2 = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }
    Scalar inverse() const;
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline Scalar conj(const Scalar& z) { return z.conj(); }

// "3", "-1/2", "i", "-i", "(re,im)" forms are produced by to_string; see dsl.cpp
// for the inverse direction.
std::string to_string(const Scalar& z);

}  // namespace lcskt
