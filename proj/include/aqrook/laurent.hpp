#pragma once

#include <map>
#include <string>

#include "aqrook/monomial.hpp"
#include "aqrook/rational.hpp"

namespace aqrook {

/**
 * Sparse Laurent polynomial in (s, b, Z) over the rationals.
 *
 * Terms live in a map ordered by the canonical (eb, es, ez) order and a zero
 * coefficient is never stored, so two values are equal iff their term maps
 * are equal and printing/iteration is reproducible.
 */
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c) {
        if (c != 0) terms_.emplace(Monomial{}, rational(c));
    }
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }

    static LaurentPoly monomial(const Rational& c, const Monomial& m) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Accumulates c * m, erasing the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);

    /// In-place multiplication by the monomial c * m.
    void mul_monomial(const Rational& c, const Monomial& m);

    /// In-place multiplication by the binomial (1 - c * m).
    void mul_binomial(const Rational& c, const Monomial& m);

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

    /// Exact evaluation; throws EvalPole on 0 raised to a negative power.
    Rational eval(const Rational& s, const Rational& b, const Rational& Z) const;

    /// a -> a q^e, i.e. es += e * eb per term. Throws OddBExponent if any
    /// term has an odd b-exponent.
    LaurentPoly substitute_a(int e) const;

    /// Largest b-exponent present. Requires a nonzero polynomial.
    int max_b_exponent() const;

    /// Terms of the top b-level with the b-exponent dropped to zero.
    LaurentPoly top_b_slice() const;

    /// Componentwise minimum exponent over all terms (unit for the zero
    /// polynomial); used to normalize printed fractions.
    Monomial min_exponents() const;

    /// Canonical text form, e.g. "1-b^2*s^2". See RatExpr::to_string.
    std::string to_string() const;

    /// Inverse of to_string; throws ParseError.
    static LaurentPoly parse(const std::string& text);

private:
    TermMap terms_;
};

/// True iff a * b == c * d, computed with a single fused accumulator so the
/// two cross products are never materialized separately.
bool product_equal(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c,
                   const LaurentPoly& d);

}  // namespace aqrook
