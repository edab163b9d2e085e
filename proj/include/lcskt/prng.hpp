#pragma once

#include <cstdint>

#include "lcskt/scalar.hpp"

namespace lcskt {

// splitmix64; deterministic across platforms, seeds the whole sweep/test
// sampling layer.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Inclusive bounds.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Small-height rationals keep polynomial identity testing fast and the
    // reproducer files readable.
    Rat rat(long height = 20) {
        Rat r(int_in(-height, height), int_in(1, height));
        r.canonicalize();
        return r;
    }

    Rat nonzero_rat(long height = 20) {
        while (true) {
            Rat r = rat(height);
            if (!is_zero(r)) return r;
        }
    }

    Rat positive_rat(long height = 20) {
        Rat r(int_in(1, height), int_in(1, height));
        r.canonicalize();
        return r;
    }

    Scalar scalar(long height = 20) { return Scalar(rat(height), rat(height)); }

    // Dense rational points of the unit circle: ((1-t^2) + 2it) / (1+t^2).
    Scalar unit_scalar(long height = 20) {
        Rat t = rat(height);
        Rat denom = 1 + t * t;
        return Scalar((1 - t * t) / denom, 2 * t / denom);
    }
};

}  // namespace lcskt
