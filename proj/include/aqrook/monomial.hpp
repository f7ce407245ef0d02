#pragma once

#include <cstddef>
#include <cstdint>

namespace aqrook {

/**
 * Exponent triple of a Laurent monomial s^es * b^eb * Z^ez.
 *
 * The three variables encode the base, the extra parameter and the generic
 * power of the base: q = s^2, a = b^2 and Z = q^z. Square roots of q and a
 * are therefore ordinary monomials (q^{1/2} = s, a^{1/2} = b) and z never
 * needs a numeric value. Exponents may be negative; (0,0,0) is the unit.
 */
struct Monomial {
    int es = 0;
    int eb = 0;
    int ez = 0;

    bool is_unit() const { return es == 0 && eb == 0 && ez == 0; }

    Monomial inverse() const { return {-es, -eb, -ez}; }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return {x.es + y.es, x.eb + y.eb, x.ez + y.ez};
    }
    friend Monomial operator/(const Monomial& x, const Monomial& y) {
        return {x.es - y.es, x.eb - y.eb, x.ez - y.ez};
    }

    Monomial pow(int e) const { return {es * e, eb * e, ez * e}; }

    friend bool operator==(const Monomial& x, const Monomial& y) = default;
};

/// Canonical term order: lexicographic on (eb, es, ez), ascending.
inline bool operator<(const Monomial& x, const Monomial& y) {
    if (x.eb != y.eb) return x.eb < y.eb;
    if (x.es != y.es) return x.es < y.es;
    return x.ez < y.ez;
}

/// q^k = s^{2k}.
inline Monomial q_pow(int k) { return {2 * k, 0, 0}; }

/// a * q^k = b^2 s^{2k}.
inline Monomial aq_pow(int k) { return {2 * k, 2, 0}; }

/// q^{z+k} = Z s^{2k}.
inline Monomial qz_pow(int k) { return {2 * k, 0, 1}; }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t v : {static_cast<std::uint64_t>(static_cast<std::uint32_t>(m.es)),
                                static_cast<std::uint64_t>(static_cast<std::uint32_t>(m.eb)),
                                static_cast<std::uint64_t>(static_cast<std::uint32_t>(m.ez))}) {
            h ^= v + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace aqrook
