#pragma once

#include <cstdint>
#include <vector>

#include "aqrook/ratexpr.hpp"

// Expected values for the derived examples are assembled here from raw
// polynomial operations only, independent of the factored machinery the
// library computes with.

namespace testsupport {

using aqrook::LaurentPoly;
using aqrook::Monomial;
using aqrook::RatExpr;

/// c * s^es * b^eb * Z^ez
inline LaurentPoly mono(long c, int es, int eb = 0, int ez = 0) {
    return LaurentPoly::monomial(aqrook::rational(c), Monomial{es, eb, ez});
}

/// 1 - c * s^es * b^eb * Z^ez
inline LaurentPoly one_minus(long c, int es, int eb = 0, int ez = 0) {
    LaurentPoly p(1);
    p -= mono(c, es, eb, ez);
    return p;
}

/// Product of factors.
inline LaurentPoly prod(const std::vector<LaurentPoly>& factors) {
    LaurentPoly p(1);
    for (const auto& f : factors) p *= f;
    return p;
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [lo, hi].
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline LaurentPoly random_poly(Rng& rng, int max_terms = 4, int spread = 3) {
    LaurentPoly p;
    int terms = rng.range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        long c = rng.range(-5, 5);
        if (c == 0) c = 1;
        p.add_term(Monomial{rng.range(-spread, spread), rng.range(-spread, spread),
                            rng.range(-spread, spread)},
                   aqrook::rational(c));
    }
    if (p.is_zero()) p = LaurentPoly(1);
    return p;
}

inline RatExpr random_ratexpr(Rng& rng) {
    LaurentPoly den = random_poly(rng);
    while (den.is_zero()) den = random_poly(rng);
    return RatExpr(random_poly(rng), den);
}

}  // namespace testsupport
