#include "aqrook/ratexpr.hpp"

#include <utility>

#include "aqrook/errors.hpp"

namespace aqrook {

RatExpr::RatExpr(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
}

RatExpr& RatExpr::operator+=(const RatExpr& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    return *this;
}

RatExpr& RatExpr::operator-=(const RatExpr& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    return *this;
}

RatExpr& RatExpr::operator*=(const RatExpr& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    return *this;
}

RatExpr& RatExpr::operator/=(const RatExpr& o) {
    if (o.num_.is_zero()) throw DivisionByZero();
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    return *this;
}

RatExpr RatExpr::operator-() const { return RatExpr(-num_, den_); }

Rational RatExpr::eval(const Rational& s, const Rational& b, const Rational& Z) const {
    Rational d = den_.eval(s, b, Z);
    if (d == 0) throw EvalPole();
    return num_.eval(s, b, Z) / d;
}

bool ratexpr_equal(const RatExpr& x, const RatExpr& y) {
    return product_equal(x.num(), y.den(), y.num(), x.den());
}

bool ratexpr_equal_probabilistic(const RatExpr& x, const RatExpr& y, int trials,
                                 std::uint64_t seed) {
    // splitmix64 stream; points are small rationals p/q with p in [-9, 9],
    // q in [1, 7], resampled while they hit a pole.
    std::uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    auto coord = [&next]() {
        long p = static_cast<long>(next() % 19) - 9;
        long q = static_cast<long>(next() % 7) + 1;
        if (p == 0) p = 1;
        return rational(p, q);
    };
    int done = 0;
    while (done < trials) {
        Rational s = coord(), b = coord(), Z = coord();
        Rational dx = x.den().eval(s, b, Z);
        Rational dy = y.den().eval(s, b, Z);
        if (dx == 0 || dy == 0) continue;  // pole: resample
        if (x.num().eval(s, b, Z) * dy != y.num().eval(s, b, Z) * dx) return false;
        ++done;
    }
    return true;
}

RatExpr substitute_a(const RatExpr& x, int e) {
    return RatExpr(x.num().substitute_a(e), x.den().substitute_a(e));
}

RatExpr limit_a_infinity(const RatExpr& x) {
    if (x.num().is_zero()) return RatExpr();
    int bn = x.num().max_b_exponent();
    int bd = x.den().max_b_exponent();
    if (bn < bd) return RatExpr();
    if (bn > bd) throw DivergentLimit();
    return RatExpr(x.num().top_b_slice(), x.den().top_b_slice());
}

std::pair<LaurentPoly, LaurentPoly> RatExpr::canonical_pair() const {
    if (num_.is_zero()) return {LaurentPoly(), LaurentPoly(1)};
    // Shift both parts by the common monomial that zeroes every variable's
    // minimum exponent across the pair, then fix the denominator's sign.
    Monomial lo_n = num_.min_exponents();
    Monomial lo_d = den_.min_exponents();
    Monomial shift{-std::min(lo_n.es, lo_d.es), -std::min(lo_n.eb, lo_d.eb),
                   -std::min(lo_n.ez, lo_d.ez)};
    LaurentPoly n = num_;
    LaurentPoly d = den_;
    n.mul_monomial(1, shift);
    d.mul_monomial(1, shift);
    if (d.terms().begin()->second < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d)};
}

std::string RatExpr::to_string() const {
    auto [n, d] = canonical_pair();
    if (n.is_zero()) return "0";
    if (d.is_one()) return n.to_string();
    return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

RatExpr RatExpr::parse(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw ParseError("empty expression");
    if (text.front() == '(') {
        auto split = text.find(")/(");
        if (split == std::string::npos || text.back() != ')')
            throw ParseError("malformed quotient: " + raw);
        LaurentPoly num = LaurentPoly::parse(text.substr(1, split - 1));
        LaurentPoly den = LaurentPoly::parse(text.substr(split + 3, text.size() - split - 4));
        return RatExpr(std::move(num), std::move(den));
    }
    return RatExpr(LaurentPoly::parse(text));
}

}  // namespace aqrook
