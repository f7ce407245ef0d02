#include <doctest.h>

#include "aqrook/errors.hpp"
#include "aqrook/factored.hpp"
#include "aqrook/weights.hpp"
#include "test_support.hpp"

using namespace aqrook;
using namespace testsupport;

namespace {

RatExpr frac(const LaurentPoly& num, const LaurentPoly& den) { return RatExpr(num, den); }

RatExpr aq(int z_coeff, int offset, int a_shift = 0) {
    return aq_number({z_coeff, offset}, a_shift);
}

}  // namespace

TEST_CASE("laurent polynomial ring arithmetic") {
    LaurentPoly s2 = mono(1, 2);
    CHECK(one_minus(1, 2) + s2 == LaurentPoly(1));
    CHECK(one_minus(1, 2) * (LaurentPoly(1) + s2) == one_minus(1, 4));

    LaurentPoly z_minus_b2z = mono(1, 0, 0, 1) - mono(1, 0, 2, 1);
    CHECK(z_minus_b2z * LaurentPoly(1) == mono(1, 0, 0, 1) * one_minus(1, 0, 2, 0));

    // No zero coefficients survive cancellation.
    LaurentPoly diff = s2 - s2;
    CHECK(diff.is_zero());
    CHECK(diff.term_count() == 0);
}

TEST_CASE("rational expression arithmetic stays unreduced") {
    RatExpr half = frac(LaurentPoly(1), one_minus(1, 2));
    RatExpr sum = half + half;
    CHECK(ratexpr_equal(sum, frac(LaurentPoly(2), one_minus(1, 2))));
    // Denominators multiply; no reduction happened.
    CHECK(sum.den() == one_minus(1, 2) * one_minus(1, 2));

    RatExpr x = frac(one_minus(1, 2, 2), mono(1, 2));
    CHECK(ratexpr_equal(x / x, RatExpr(1)));

    CHECK_THROWS_AS(x / RatExpr(0), DivisionByZero);
    CHECK_THROWS_AS(RatExpr(LaurentPoly(1), LaurentPoly(0)), DivisionByZero);
}

TEST_CASE("cross-multiplication equality") {
    CHECK(ratexpr_equal(frac(LaurentPoly(1), one_minus(1, 2)),
                        frac(LaurentPoly(1) + mono(1, 2), one_minus(1, 4))));
    CHECK_FALSE(ratexpr_equal(RatExpr::from_monomial(1, q_pow(1)),
                              RatExpr::from_monomial(1, q_pow(2))));
    CHECK(ratexpr_equal(small_weight(1) * small_weight(2), big_weight(2)));
}

TEST_CASE("pochhammer products") {
    RatExpr u = frac(mono(1, 0, 0, 1), one_minus(1, 2));
    CHECK(ratexpr_equal(pochhammer(u, q_pow(1), 0), RatExpr(1)));
    CHECK(pochhammer(RatExpr(1), q_pow(1), 2).is_zero());

    RatExpr aq_u = RatExpr::from_monomial(1, Monomial{2, 2, 0});
    RatExpr expect = frac(one_minus(1, 2, 2) * one_minus(1, 6, 2), LaurentPoly(1));
    CHECK(ratexpr_equal(pochhammer(aq_u, q_pow(2), 2), expect));
}

TEST_CASE("small and big weights") {
    CHECK(ratexpr_equal(small_weight(0),
                        frac(mono(1, -2) * one_minus(1, 2, 2), one_minus(1, -2, 2))));
    CHECK(ratexpr_equal(small_weight(1),
                        frac(mono(1, -2) * one_minus(1, 6, 2), one_minus(1, 2, 2))));
    // Shifting a by q^2 moves the weight one step up.
    CHECK(ratexpr_equal(small_weight(0, 2), small_weight(1, 0)));

    CHECK(ratexpr_equal(big_weight(0), RatExpr(1)));
    CHECK(ratexpr_equal(big_weight(1), small_weight(1)));
    CHECK(ratexpr_equal(big_weight(-1),
                        frac(mono(1, 2) * one_minus(1, -2, 2), one_minus(1, 2, 2))));
    // W(k) is the product of small weights for positive k.
    RatExpr w_prod(1);
    for (int i = 1; i <= 4; ++i) {
        w_prod *= small_weight(i);
        CHECK(ratexpr_equal(big_weight(i), w_prod));
    }
}

TEST_CASE("weighted numbers, factorials, binomials") {
    CHECK(ratexpr_equal(aq(0, 1), RatExpr(1)));
    RatExpr two = frac(mono(1, -2) * (LaurentPoly(1) + mono(1, 2)) * one_minus(1, 4, 2),
                       one_minus(1, 2, 2));
    CHECK(ratexpr_equal(aq(0, 2), two));
    RatExpr z_number = frac(one_minus(1, 0, 0, 1) * one_minus(1, 0, 2, 1) * mono(1, 2, 0, -1),
                            one_minus(1, 2) * one_minus(1, 2, 2));
    CHECK(ratexpr_equal(aq(1, 0), z_number));

    CHECK(ratexpr_equal(aq_factorial(0), RatExpr(1)));
    CHECK(ratexpr_equal(aq_factorial(1), RatExpr(1)));
    CHECK(ratexpr_equal(aq_factorial(2), aq(0, 2)));

    for (int n = 0; n <= 5; ++n) CHECK(ratexpr_equal(aq_binomial(n, 0), RatExpr(1)));
    CHECK(ratexpr_equal(aq_binomial(2, 1), aq(0, 2)));
    CHECK(ratexpr_equal(aq_binomial(5, 2), aq_binomial(5, 3)));
    CHECK(aq_binomial(3, -1).is_zero());
    CHECK(aq_binomial(3, 4).is_zero());
    // Product form agrees with the factorial quotient.
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(ratexpr_equal(aq_binomial(n, k) * aq_factorial(k) * aq_factorial(n - k),
                                aq_factorial(n)));
}

TEST_CASE("q specializations") {
    CHECK(ratexpr_equal(q_number(1), RatExpr(1)));
    LaurentPoly gauss42(1);
    gauss42 += mono(1, 2);
    gauss42 += mono(2, 4);
    gauss42 += mono(1, 6);
    gauss42 += mono(1, 8);
    CHECK(ratexpr_equal(q_binomial(4, 2), RatExpr(gauss42)));
    CHECK(ratexpr_equal(q_factorial(2), RatExpr(LaurentPoly(1) + mono(1, 2))));
    CHECK(q_binomial(3, 5).is_zero());
}

TEST_CASE("substitute_a") {
    CHECK(ratexpr_equal(substitute_a(aq(0, 2), 2), aq(0, 2, 2)));
    CHECK(ratexpr_equal(substitute_a(small_weight(0), 2), small_weight(1)));
    RatExpr x = frac(one_minus(1, 2, 2) * mono(3, -1), one_minus(1, 0, 4, 1));
    CHECK(substitute_a(x, 0).num() == x.num());
    CHECK(substitute_a(x, 0).den() == x.den());
    for (int e1 = -2; e1 <= 2; ++e1)
        for (int e2 = -2; e2 <= 2; ++e2) {
            RatExpr direct = substitute_a(x, e1 + e2);
            RatExpr stepwise = substitute_a(substitute_a(x, e1), e2);
            CHECK(direct.num() == stepwise.num());
            CHECK(direct.den() == stepwise.den());
        }
    RatExpr odd = RatExpr::from_monomial(1, Monomial{0, 1, 0});
    CHECK_THROWS_AS(substitute_a(odd, 1), OddBExponent);
}

TEST_CASE("exact evaluation") {
    RatExpr x = frac(LaurentPoly(1), one_minus(1, 2));
    CHECK(x.eval(rational(2), rational(1), rational(1)) == rational(-1, 3));
    CHECK_THROWS_AS(x.eval(rational(1), rational(5), rational(5)), EvalPole);
    CHECK(aq(0, 1).eval(rational(2), rational(3), rational(5)) == rational(1));
    // Negative exponent at a zero coordinate is a pole as well.
    RatExpr inv = RatExpr::from_monomial(1, Monomial{-1, 0, 0});
    CHECK_THROWS_AS(inv.eval(rational(0), rational(1), rational(1)), EvalPole);
}

TEST_CASE("limit a -> infinity") {
    RatExpr q = RatExpr::from_monomial(1, q_pow(1));
    for (int k = -3; k <= 3; ++k) {
        CHECK(ratexpr_equal(limit_a_infinity(small_weight(k)), q));
        CHECK(ratexpr_equal(limit_a_infinity(big_weight(k)), RatExpr::from_monomial(1, q_pow(k))));
    }
    CHECK(ratexpr_equal(limit_a_infinity(aq(1, 0)),
                        frac(one_minus(1, 0, 0, 1), one_minus(1, 2))));
    CHECK(limit_a_infinity(frac(LaurentPoly(1), one_minus(1, 2, 2))).is_zero());
    CHECK_THROWS_AS(limit_a_infinity(RatExpr(one_minus(1, 2, 2))), DivergentLimit);
}

TEST_CASE("equality is an equivalence relation and matches evaluation") {
    Rng rng(0xabcdef12);
    for (int trial = 0; trial < 40; ++trial) {
        RatExpr x = random_ratexpr(rng);
        RatExpr y = random_ratexpr(rng);
        RatExpr z = random_ratexpr(rng);
        CHECK(ratexpr_equal(x, x));
        CHECK(ratexpr_equal(x, y) == ratexpr_equal(y, x));
        // Transitivity over a family of reshaped copies of x.
        LaurentPoly pad = random_poly(rng);
        if (!pad.is_zero()) {
            RatExpr x2 = x * frac(pad, pad);
            RatExpr x3 = x2 * frac(pad, pad);
            CHECK(ratexpr_equal(x, x2));
            CHECK(ratexpr_equal(x2, x3));
            CHECK(ratexpr_equal(x, x3));
        }
        CHECK(ratexpr_equal(x, y) == ratexpr_equal_probabilistic(x, y, 20, 0x5eed + trial));
    }
}

TEST_CASE("pochhammer splitting") {
    std::vector<RatExpr> seeds = {RatExpr::from_monomial(1, Monomial{0, 0, 1}),
                                  RatExpr::from_monomial(1, Monomial{-1, 2, 0}),
                                  frac(one_minus(1, 2, 2), one_minus(1, 4))};
    for (const RatExpr& u : seeds)
        for (int m = 0; m <= 6; ++m)
            for (int n = 0; n + m <= 6; ++n) {
                RatExpr shifted = u * RatExpr::from_monomial(1, q_pow(m));
                CHECK(ratexpr_equal(pochhammer(u, q_pow(1), m + n),
                                    pochhammer(u, q_pow(1), m) *
                                        pochhammer(shifted, q_pow(1), n)));
            }
}

TEST_CASE("big weight multiplicativity and number splitting") {
    for (int k = -4; k <= 4; ++k)
        for (int n = -4; n <= 4; ++n)
            CHECK(ratexpr_equal(big_weight(k + n), big_weight(k) * big_weight(n, 2 * k)));
    for (int y = 0; y <= 5; ++y)
        CHECK(ratexpr_equal(aq(1, y), aq(0, y) + big_weight(y) * aq(1, 0, 2 * y)));
}

TEST_CASE("factored representation agrees with direct arithmetic") {
    // Sum over a shared denominator equals the naive pairwise sum.
    std::vector<FactorProduct> terms = {f_small_weight(0), f_small_weight(1), f_small_weight(3),
                                        f_big_weight(2), f_aq_number({1, -1}, 2)};
    RatExpr naive(0);
    for (const auto& t : terms) naive += t.to_ratexpr();
    CHECK(ratexpr_equal(sum_factor_products(terms).to_ratexpr(), naive));

    FExpr sum;
    for (const auto& t : terms) sum += FExpr(t);
    CHECK(ratexpr_equal(sum.to_ratexpr(), naive));
    CHECK(fexpr_equal(sum, sum_factor_products(terms)));

    // fexpr_equal decides the same relation as ratexpr_equal.
    FExpr lhs = FExpr(f_big_weight(2));
    FExpr rhs = FExpr(f_small_weight(1) * f_small_weight(2));
    CHECK(fexpr_equal(lhs, rhs));
    CHECK_FALSE(fexpr_equal(lhs, FExpr(f_small_weight(1))));

    // Factored primitives match their public expansions.
    CHECK(ratexpr_equal(f_q_binomial(4, 2).to_ratexpr(), q_binomial(4, 2)));
    CHECK(ratexpr_equal(f_aq_binomial(5, 2).to_ratexpr(), aq_binomial(5, 2)));
    CHECK(ratexpr_equal(f_q_factorial(3).to_ratexpr(), q_factorial(3)));
    CHECK(ratexpr_equal(f_aq_factorial(3).to_ratexpr(), aq_factorial(3)));
}

TEST_CASE("canonical text form and parsing") {
    CHECK(small_weight(0).to_string() == "(1-b^2*s^2)/(s^2-b^2)");
    CHECK(RatExpr(1).to_string() == "1");
    CHECK(RatExpr(0).to_string() == "0");
    LaurentPoly gauss(1);
    gauss += mono(1, 2);
    gauss += mono(2, 4);
    gauss += mono(1, 6);
    gauss += mono(1, 8);
    CHECK(RatExpr(gauss).to_string() == "1+s^2+2*s^4+s^6+s^8");

    CHECK(ratexpr_equal(RatExpr::parse("(1-b^2*s^2)/(s^2-b^2)"), small_weight(0)));
    CHECK(ratexpr_equal(RatExpr::parse("3/2*s^-2*Z"),
                        frac(mono(3, -2, 0, 1), LaurentPoly(2))));
    CHECK_THROWS_AS(RatExpr::parse("1+"), ParseError);
    CHECK_THROWS_AS(RatExpr::parse("(1)/(0)"), DivisionByZero);
    CHECK_THROWS_AS(RatExpr::parse("x+1"), ParseError);

    Rng rng(0x77aa11);
    for (int trial = 0; trial < 60; ++trial) {
        RatExpr x = random_ratexpr(rng);
        std::string text = x.to_string();
        RatExpr back = RatExpr::parse(text);
        CHECK(ratexpr_equal(back, x));
        CHECK(back.to_string() == text);
    }
}
