#pragma once

#include <cstdint>
#include <string>

#include "aqrook/laurent.hpp"

namespace aqrook {

/**
 * Quotient of two Laurent polynomials with a nonzero denominator.
 *
 * Values are deliberately kept unreduced: arithmetic never computes a gcd
 * and equality is the cross-multiplication relation
 * num1 * den2 == num2 * den1. This is the proof relation used by every
 * identity check in the library.
 */
class RatExpr {
public:
    RatExpr() : num_(), den_(1) {}
    RatExpr(long c) : num_(c), den_(1) {}
    explicit RatExpr(LaurentPoly num) : num_(std::move(num)), den_(1) {}
    RatExpr(LaurentPoly num, LaurentPoly den);

    static RatExpr from_monomial(const Rational& c, const Monomial& m) {
        return RatExpr(LaurentPoly::monomial(c, m));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatExpr& operator+=(const RatExpr& o);
    RatExpr& operator-=(const RatExpr& o);
    RatExpr& operator*=(const RatExpr& o);
    /// Throws DivisionByZero if o.num() is zero.
    RatExpr& operator/=(const RatExpr& o);
    RatExpr operator-() const;

    friend RatExpr operator+(RatExpr x, const RatExpr& y) { return x += y; }
    friend RatExpr operator-(RatExpr x, const RatExpr& y) { return x -= y; }
    friend RatExpr operator*(RatExpr x, const RatExpr& y) { return x *= y; }
    friend RatExpr operator/(RatExpr x, const RatExpr& y) { return x /= y; }

    /// Exact evaluation at a rational point; throws EvalPole when the
    /// denominator vanishes there.
    Rational eval(const Rational& s, const Rational& b, const Rational& Z) const;

    /**
     * Canonical text form "(num)/(den)", or just "num" when the denominator
     * is 1. Both polynomials are shifted by the common monomial that makes
     * every variable's minimum exponent across the pair zero, and the sign
     * is normalized so the denominator's leading coefficient is positive.
     */
    std::string to_string() const;

    /// The normalized (num, den) pair behind to_string.
    std::pair<LaurentPoly, LaurentPoly> canonical_pair() const;

    /// Inverse of to_string; throws ParseError.
    static RatExpr parse(const std::string& text);

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

/// Cross-multiplication equality: x.num * y.den == y.num * x.den.
bool ratexpr_equal(const RatExpr& x, const RatExpr& y);

/// Schwartz-Zippel style probabilistic cross-check of ratexpr_equal:
/// compares evaluations at `trials` pseudo-random non-pole points drawn from
/// a fixed-seed generator. Internal diagnostic only.
bool ratexpr_equal_probabilistic(const RatExpr& x, const RatExpr& y, int trials = 20,
                                 std::uint64_t seed = 0x5eed);

/// a -> a q^e on both numerator and denominator. Throws OddBExponent.
RatExpr substitute_a(const RatExpr& x, int e);

/**
 * Limit a -> infinity (b -> infinity with a = b^2): the ratio of the top
 * b-level coefficient polynomials, zero when the numerator's top b-degree is
 * smaller, DivergentLimit when it is larger.
 */
RatExpr limit_a_infinity(const RatExpr& x);

}  // namespace aqrook
