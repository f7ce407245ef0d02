#include "aqrook/factored.hpp"

#include "aqrook/errors.hpp"

namespace aqrook {

void FactorProduct::mul_coeff(const Rational& c) {
    coeff_ *= c;
    if (coeff_ == 0) {
        mono_ = Monomial{};
        factors_.clear();
    }
}

void FactorProduct::mul_mono(const Monomial& m) {
    if (is_zero()) return;
    mono_ = mono_ * m;
}

void FactorProduct::mul_factor(const Rational& c, const Monomial& m, int mult) {
    if (is_zero() || mult == 0 || c == 0) return;
    if (m.is_unit()) {
        // Constant factor (1 - c).
        Rational v = 1 - c;
        if (v == 0) {
            if (mult < 0) throw DivisionByZero("vanishing factor in a denominator");
            mul_coeff(Rational(0));
            return;
        }
        Rational scaled(1);
        for (int i = 0; i < (mult > 0 ? mult : -mult); ++i) scaled *= v;
        mul_coeff(mult > 0 ? scaled : Rational(1 / scaled));
        return;
    }
    auto [it, inserted] = factors_.try_emplace(BinomFactor{m, c}, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactorProduct::mul_poch(const Rational& c, const Monomial& u, const Monomial& step, int n,
                             int mult) {
    for (int i = 0; i < n; ++i) mul_factor(c, u * step.pow(i), mult);
}

FactorProduct& FactorProduct::operator*=(const FactorProduct& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        mul_coeff(Rational(0));
        return *this;
    }
    mul_coeff(o.coeff_);
    mul_mono(o.mono_);
    for (const auto& [f, e] : o.factors_) mul_factor(f.c, f.m, e);
    return *this;
}

FactorProduct FactorProduct::substituted_a(int e) const {
    auto shift = [e](const Monomial& m) {
        if (m.eb % 2 != 0) throw OddBExponent();
        return Monomial{m.es + e * m.eb, m.eb, m.ez};
    };
    FactorProduct out(coeff_);
    if (is_zero()) return out;
    out.mono_ = shift(mono_);
    for (const auto& [f, mult] : factors_) out.factors_.emplace(BinomFactor{shift(f.m), f.c}, mult);
    return out;
}

namespace {

LaurentPoly expand_factors(const Rational& coeff, const Monomial& mono,
                           const FactorSet& factors) {
    LaurentPoly out = LaurentPoly::monomial(coeff, mono);
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) out.mul_binomial(f.c, f.m);
    return out;
}

/// Factorwise max of the two sets.
FactorSet factor_lcm(const FactorSet& x, const FactorSet& y) {
    FactorSet out = x;
    for (const auto& [f, e] : y) {
        auto [it, inserted] = out.try_emplace(f, e);
        if (!inserted && it->second < e) it->second = e;
    }
    return out;
}

/// Expansion of prod (1 - c m)^{hi[f] - lo[f]} applied in place to p.
void mul_cofactor(LaurentPoly& p, const FactorSet& hi, const FactorSet& lo) {
    auto it_lo = lo.begin();
    for (const auto& [f, e] : hi) {
        int have = 0;
        while (it_lo != lo.end() && it_lo->first < f) ++it_lo;
        if (it_lo != lo.end() && it_lo->first == f) have = it_lo->second;
        for (int i = have; i < e; ++i) p.mul_binomial(f.c, f.m);
    }
}

}  // namespace

RatExpr FactorProduct::to_ratexpr() const {
    if (is_zero()) return RatExpr();
    FactorSet pos, neg;
    for (const auto& [f, e] : factors_)
        (e > 0 ? pos : neg).emplace(f, e > 0 ? e : -e);
    return RatExpr(expand_factors(coeff_, mono_, pos), expand_factors(1, Monomial{}, neg));
}

FactorProduct f_small_weight(int k, int a_shift) {
    FactorProduct w;
    w.mul_mono(q_pow(-1));
    w.mul_factor(1, aq_pow(a_shift + 2 * k + 1), +1);
    w.mul_factor(1, aq_pow(a_shift + 2 * k - 1), -1);
    return w;
}

FactorProduct f_big_weight(int k, int a_shift) {
    FactorProduct w;
    w.mul_mono(q_pow(-k));
    w.mul_factor(1, aq_pow(a_shift + 2 * k + 1), +1);
    w.mul_factor(1, aq_pow(a_shift + 1), -1);
    return w;
}

FactorProduct f_aq_number(LinearArg arg, int a_shift) {
    if (arg.z_coeff != 0 && arg.z_coeff != 1)
        throw InvalidFamilyParams("weighted-number argument must be z + c or a constant");
    Monomial qarg{2 * arg.offset, 0, arg.z_coeff};
    FactorProduct w;
    w.mul_factor(1, qarg, +1);
    if (w.is_zero()) return w;  // [0] = 0
    w.mul_factor(1, aq_pow(a_shift) * qarg, +1);
    w.mul_mono(q_pow(1) * qarg.inverse());  // q^{1 - arg}
    w.mul_factor(1, q_pow(1), -1);
    w.mul_factor(1, aq_pow(a_shift + 1), -1);
    return w;
}

FactorProduct f_aq_factorial(int n) {
    FactorProduct out;
    for (int j = 1; j <= n; ++j) out *= f_aq_number({0, j}, 0);
    return out;
}

FactorProduct f_aq_binomial(int n, int k) {
    if (k < 0 || k > n) return FactorProduct::zero();
    FactorProduct out;
    out.mul_poch(1, q_pow(1 + k), q_pow(1), n - k, +1);
    out.mul_poch(1, aq_pow(1 + k), q_pow(1), n - k, +1);
    out.mul_poch(1, q_pow(1), q_pow(1), n - k, -1);
    out.mul_poch(1, aq_pow(1), q_pow(1), n - k, -1);
    out.mul_mono(q_pow(k * (k - n)));
    return out;
}

FactorProduct f_q_number(int z) {
    FactorProduct out;
    out.mul_factor(1, q_pow(z), +1);
    out.mul_factor(1, q_pow(1), -1);
    return out;
}

FactorProduct f_q_factorial(int n) {
    FactorProduct out;
    out.mul_poch(1, q_pow(1), q_pow(1), n, +1);
    out.mul_factor(1, q_pow(1), -n);
    return out;
}

FactorProduct f_q_binomial(int n, int k) {
    if (k < 0 || k > n) return FactorProduct::zero();
    FactorProduct out;
    out.mul_poch(1, q_pow(1), q_pow(1), n, +1);
    out.mul_poch(1, q_pow(1), q_pow(1), k, -1);
    out.mul_poch(1, q_pow(1), q_pow(1), n - k, -1);
    return out;
}

FactorProduct f_poch(const Rational& c, const Monomial& u, const Monomial& step, int n,
                     int mult) {
    FactorProduct out;
    out.mul_poch(c, u, step, n, mult);
    return out;
}

FExpr::FExpr(const FactorProduct& p) {
    if (p.is_zero()) return;
    FactorSet pos;
    for (const auto& [f, e] : p.factors()) {
        if (e > 0)
            pos.emplace(f, e);
        else
            den_.emplace(f, -e);
    }
    num_ = expand_factors(p.coeff(), p.mono(), pos);
}

FExpr& FExpr::operator+=(const FExpr& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    FactorSet lcm = factor_lcm(den_, o.den_);
    mul_cofactor(num_, lcm, den_);
    LaurentPoly rhs = o.num_;
    mul_cofactor(rhs, lcm, o.den_);
    num_ += rhs;
    den_ = std::move(lcm);
    if (num_.is_zero()) den_.clear();
    return *this;
}

FExpr& FExpr::operator*=(const FactorProduct& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = LaurentPoly();
        den_.clear();
        return *this;
    }
    num_.mul_monomial(o.coeff(), o.mono());
    for (const auto& [f, e] : o.factors()) {
        int mult = e;
        auto it = den_.find(f);
        if (it != den_.end()) {
            // Exact factor-level cancellation against the denominator.
            int cancel = std::min(it->second, mult > 0 ? mult : -mult);
            if (mult > 0) {
                it->second -= cancel;
                mult -= cancel;
            } else {
                it->second += -mult;
                mult = 0;
            }
            if (it->second == 0) den_.erase(it);
        }
        if (mult > 0)
            for (int i = 0; i < mult; ++i) num_.mul_binomial(f.c, f.m);
        else if (mult < 0)
            den_[f] += -mult;
    }
    return *this;
}

FExpr& FExpr::operator*=(const FExpr& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = LaurentPoly();
        den_.clear();
        return *this;
    }
    num_ *= o.num_;
    for (const auto& [f, e] : o.den_) den_[f] += e;
    return *this;
}

FExpr FExpr::substituted_a(int e) const {
    FExpr out;
    out.num_ = num_.substitute_a(e);
    for (const auto& [f, mult] : den_) {
        if (f.m.eb % 2 != 0) throw OddBExponent();
        out.den_.emplace(BinomFactor{Monomial{f.m.es + e * f.m.eb, f.m.eb, f.m.ez}, f.c}, mult);
    }
    return out;
}

RatExpr FExpr::to_ratexpr() const {
    return RatExpr(num_, expand_factors(1, Monomial{}, den_));
}

bool fexpr_equal(const FExpr& x, const FExpr& y) {
    FactorSet lcm = factor_lcm(x.den_, y.den_);
    LaurentPoly cx(1), cy(1);
    mul_cofactor(cx, lcm, x.den_);
    mul_cofactor(cy, lcm, y.den_);
    return product_equal(x.num_, cx, y.num_, cy);
}

FExpr sum_factor_products(const std::vector<FactorProduct>& terms) {
    FExpr out;
    for (const auto& t : terms)
        if (!t.is_zero())
            for (const auto& [f, e] : t.factors())
                if (e < 0) {
                    auto [it, inserted] = out.den_.try_emplace(f, -e);
                    if (!inserted && it->second < -e) it->second = -e;
                }
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        LaurentPoly part = LaurentPoly::monomial(t.coeff(), t.mono());
        // Term times common denominator: merge walk over t.factors() and
        // out.den_ multiplies every factor with its combined exponent,
        // which is nonnegative by the choice of den_.
        auto ta = t.factors().begin();
        auto da = out.den_.begin();
        while (ta != t.factors().end() || da != out.den_.end()) {
            if (da == out.den_.end() || (ta != t.factors().end() && ta->first < da->first)) {
                for (int i = 0; i < ta->second; ++i) part.mul_binomial(ta->first.c, ta->first.m);
                ++ta;
            } else if (ta == t.factors().end() || da->first < ta->first) {
                for (int i = 0; i < da->second; ++i) part.mul_binomial(da->first.c, da->first.m);
                ++da;
            } else {
                int e = ta->second + da->second;  // >= 0 by construction of den_
                for (int i = 0; i < e; ++i) part.mul_binomial(ta->first.c, ta->first.m);
                ++ta;
                ++da;
            }
        }
        out.num_ += part;
    }
    if (out.num_.is_zero()) out.den_.clear();
    return out;
}

}  // namespace aqrook
