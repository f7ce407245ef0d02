#include "aqrook/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "aqrook/errors.hpp"

namespace aqrook {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
                  (ch == '-' && i == 0);
        if (!ok) throw ParseError("bad rational: " + text);
    }
    Rational r;
    if (r.set_str(text, 10) != 0) throw ParseError("bad rational: " + text);
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator: " + text);
    return r;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out;
    if (x.is_zero() || y.is_zero()) return out;
    // Iterate the smaller operand on the outside: each pass over the larger
    // one is a monotone merge.
    const LaurentPoly& small = x.term_count() <= y.term_count() ? x : y;
    const LaurentPoly& large = x.term_count() <= y.term_count() ? y : x;
    for (const auto& [ms, cs] : small.terms_)
        for (const auto& [ml, cl] : large.terms_) {
            Monomial m = ms * ml;
            auto it = out.terms_.lower_bound(m);
            if (it != out.terms_.end() && it->first == m) {
                it->second += cs * cl;
                if (it->second == 0) out.terms_.erase(it);
            } else {
                out.terms_.emplace_hint(it, m, cs * cl);
            }
        }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
}

void LaurentPoly::mul_monomial(const Rational& c, const Monomial& m) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    TermMap shifted;
    for (const auto& [mm, cc] : terms_) shifted.emplace_hint(shifted.end(), mm * m, cc * c);
    terms_ = std::move(shifted);
}

void LaurentPoly::mul_binomial(const Rational& c, const Monomial& m) {
    if (c == 0) return;  // (1 - 0) = 1
    LaurentPoly shifted = *this;
    shifted.mul_monomial(-c, m);
    *this += shifted;
}

Rational LaurentPoly::eval(const Rational& s, const Rational& b, const Rational& Z) const {
    auto power = [](const Rational& base, int e) {
        if (e == 0) return Rational(1);
        if (base == 0 && e < 0) throw EvalPole("zero base with negative exponent");
        Rational out;
        unsigned long mag = static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e);
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), mag);
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), mag);
        out.canonicalize();
        if (e < 0) out = 1 / out;
        return out;
    };
    Rational total(0);
    for (const auto& [m, c] : terms_)
        total += c * power(s, m.es) * power(b, m.eb) * power(Z, m.ez);
    return total;
}

LaurentPoly LaurentPoly::substitute_a(int e) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.eb % 2 != 0) throw OddBExponent();
        out.add_term(Monomial{m.es + e * m.eb, m.eb, m.ez}, c);
    }
    return out;
}

int LaurentPoly::max_b_exponent() const {
    // Canonical order is b-major, so the last term carries the maximum.
    return terms_.rbegin()->first.eb;
}

LaurentPoly LaurentPoly::top_b_slice() const {
    LaurentPoly out;
    if (is_zero()) return out;
    int top = max_b_exponent();
    for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.eb == top; ++it)
        out.terms_.emplace(Monomial{it->first.es, 0, it->first.ez}, it->second);
    return out;
}

Monomial LaurentPoly::min_exponents() const {
    Monomial lo{};
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first) {
            lo = m;
            first = false;
        } else {
            lo.es = std::min(lo.es, m.es);
            lo.eb = std::min(lo.eb, m.eb);
            lo.ez = std::min(lo.ez, m.ez);
        }
    }
    return lo;
}

namespace {

void append_power(std::string& out, bool& any, const char* var, int e) {
    if (e == 0) return;
    if (any) out += '*';
    out += var;
    if (e != 1) {
        out += '^';
        out += std::to_string(e);
    }
    any = true;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (c < 0)
            out += '-';
        else if (!leading)
            out += '+';
        leading = false;
        std::string head;
        bool any = false;
        if (mag != 1 || m.is_unit()) {
            head = mag.get_str();
            any = true;
        }
        out += head;
        append_power(out, any, "b", m.eb);
        append_power(out, any, "s", m.es);
        append_power(out, any, "Z", m.ez);
    }
    return out;
}

namespace {

// One term of the canonical form: [coeff][*][var[^exp]]... with coeff a
// rational "p" or "p/q".
void parse_term(const std::string& text, std::size_t& pos, LaurentPoly& out, bool negative) {
    const std::size_t n = text.size();
    std::string coeff_text;
    while (pos < n && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        coeff_text += text[pos++];
    Rational coeff = coeff_text.empty() ? Rational(1) : parse_rational(coeff_text);
    Monomial m;
    bool expect_var = coeff_text.empty();
    if (pos < n && text[pos] == '*') {
        ++pos;
        expect_var = true;
    }
    while (expect_var) {
        if (pos >= n) throw ParseError("dangling '*' in: " + text);
        char var = text[pos];
        int* slot = nullptr;
        if (var == 's')
            slot = &m.es;
        else if (var == 'b')
            slot = &m.eb;
        else if (var == 'Z')
            slot = &m.ez;
        else
            throw ParseError(std::string("unknown variable '") + var + "' in: " + text);
        ++pos;
        int e = 1;
        if (pos < n && text[pos] == '^') {
            ++pos;
            bool neg = pos < n && text[pos] == '-';
            if (neg) ++pos;
            if (pos >= n || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("bad exponent in: " + text);
            e = 0;
            while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
                e = e * 10 + (text[pos++] - '0');
            if (neg) e = -e;
        }
        *slot += e;
        if (pos < n && text[pos] == '*') {
            ++pos;
            expect_var = true;
        } else {
            expect_var = false;
        }
    }
    out.add_term(m, negative ? Rational(-coeff) : coeff);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw ParseError("empty polynomial");
    LaurentPoly out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
        } else if (!first) {
            throw ParseError("missing sign in: " + raw);
        }
        first = false;
        parse_term(text, pos, out, negative);
    }
    return out;
}

bool product_equal(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c,
                   const LaurentPoly& d) {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.term_count() * b.term_count() + c.term_count() * d.term_count());
    auto accumulate = [&acc](const LaurentPoly& x, const LaurentPoly& y, bool negate) {
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [my, cy] : y.terms()) {
                Rational prod = cx * cy;
                if (negate) prod = -prod;
                auto [it, inserted] = acc.try_emplace(mx * my, prod);
                if (!inserted) it->second += prod;
            }
    };
    accumulate(a, b, false);
    accumulate(c, d, true);
    for (const auto& [m, v] : acc) {
        (void)m;
        if (v != 0) return false;
    }
    return true;
}

}  // namespace aqrook
