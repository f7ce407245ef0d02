#pragma once

#include <map>
#include <vector>

#include "aqrook/ratexpr.hpp"
#include "aqrook/weights.hpp"

namespace aqrook {

/// One binomial factor (1 - c * m). Unit monomials are never stored as
/// factors; they fold into the scalar coefficient of the enclosing product.
struct BinomFactor {
    Monomial m;
    Rational c;

    friend bool operator==(const BinomFactor& x, const BinomFactor& y) {
        return x.m == y.m && x.c == y.c;
    }
    friend bool operator<(const BinomFactor& x, const BinomFactor& y) {
        if (x.m == y.m) return cmp(x.c, y.c) < 0;
        return x.m < y.m;
    }
};

using FactorSet = std::map<BinomFactor, int>;

/**
 * Fully factored expression  coeff * mono * prod_f (1 - c_f m_f)^{e_f}
 * with integer exponents of either sign.
 *
 * Every weight, Pochhammer symbol and closed-form rook number is of this
 * shape, which is what lets sums of placement weights share one small
 * denominator instead of piling up pairwise products.
 */
class FactorProduct {
public:
    FactorProduct() = default;
    explicit FactorProduct(const Rational& c) : coeff_(c) {}

    static FactorProduct zero() { return FactorProduct(Rational(0)); }
    static FactorProduct from_monomial(const Rational& c, const Monomial& m) {
        FactorProduct p(c);
        if (c != 0) p.mono_ = m;
        return p;
    }

    bool is_zero() const { return coeff_ == 0; }
    const Rational& coeff() const { return coeff_; }
    const Monomial& mono() const { return mono_; }
    const FactorSet& factors() const { return factors_; }

    void mul_coeff(const Rational& c);
    void mul_mono(const Monomial& m);

    /// Multiplies by (1 - c*m)^mult. A vanishing factor (c == 1, m unit)
    /// zeroes the product when mult > 0 and throws DivisionByZero when
    /// mult < 0; other unit-monomial factors fold into the coefficient.
    void mul_factor(const Rational& c, const Monomial& m, int mult = 1);

    /// Multiplies by the Pochhammer symbol (c * u; step)_n^mult.
    void mul_poch(const Rational& c, const Monomial& u, const Monomial& step, int n, int mult = 1);

    FactorProduct& operator*=(const FactorProduct& o);
    friend FactorProduct operator*(FactorProduct x, const FactorProduct& y) { return x *= y; }

    /// a -> a q^e; valid since it maps factors to factors.
    FactorProduct substituted_a(int e) const;

    /// Expansion into an unreduced quotient: positive factors multiply into
    /// the numerator, negative ones into the denominator.
    RatExpr to_ratexpr() const;

private:
    Rational coeff_ = 1;
    Monomial mono_{};
    FactorSet factors_;
};

/// Factored forms of the primitive weights (same values as weights.hpp).
FactorProduct f_small_weight(int k, int a_shift = 0);
FactorProduct f_big_weight(int k, int a_shift = 0);
FactorProduct f_aq_number(LinearArg arg, int a_shift = 0);
FactorProduct f_aq_factorial(int n);
FactorProduct f_aq_binomial(int n, int k);
FactorProduct f_q_number(int z);
FactorProduct f_q_factorial(int n);
FactorProduct f_q_binomial(int n, int k);
/// (c * u; step)_n^mult as a standalone product.
FactorProduct f_poch(const Rational& c, const Monomial& u, const Monomial& step, int n,
                     int mult = 1);

/**
 * Fraction with an expanded numerator over a factored denominator (all
 * multiplicities positive). Sums put both operands over the factorwise
 * least common multiple of the denominators, so no gcd is ever computed
 * and the denominator only grows by genuinely new factors.
 */
class FExpr {
public:
    FExpr() = default;  // zero
    FExpr(long c) : num_(c) {}
    explicit FExpr(const FactorProduct& p);

    bool is_zero() const { return num_.is_zero(); }
    const LaurentPoly& num() const { return num_; }
    const FactorSet& den() const { return den_; }

    FExpr& operator+=(const FExpr& o);
    FExpr& operator*=(const FactorProduct& o);
    FExpr& operator*=(const FExpr& o);
    friend FExpr operator+(FExpr x, const FExpr& y) { return x += y; }
    friend FExpr operator*(FExpr x, const FactorProduct& y) { return x *= y; }
    friend FExpr operator*(FExpr x, const FExpr& y) { return x *= y; }

    FExpr substituted_a(int e) const;

    RatExpr to_ratexpr() const;

private:
    LaurentPoly num_;
    FactorSet den_;  // multiplicities > 0

    friend bool fexpr_equal(const FExpr& x, const FExpr& y);
    friend FExpr sum_factor_products(const std::vector<FactorProduct>& terms);
};

/// Cross-multiplication equality over the factored common denominator;
/// decides the same relation as ratexpr_equal on the expanded quotients.
bool fexpr_equal(const FExpr& x, const FExpr& y);

/// Sum of factored terms over one shared denominator, built in a single
/// pass: the denominator is the factorwise maximum of the terms' negative
/// parts and each term expands against its cofactor.
FExpr sum_factor_products(const std::vector<FactorProduct>& terms);

}  // namespace aqrook
