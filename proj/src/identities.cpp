#include "aqrook/identities.hpp"

#include <chrono>

namespace aqrook {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

/// Collects pairwise equality checks; the first failing pair becomes the
/// report witness (canonical forms of both sides).
struct Checker {
    bool ok = true;
    std::optional<std::pair<std::string, std::string>> witness;

    void check(const FExpr& lhs, const FExpr& rhs) {
        if (!ok) return;
        if (!fexpr_equal(lhs, rhs)) {
            ok = false;
            witness = {{lhs.to_ratexpr().to_string(), rhs.to_ratexpr().to_string()}};
        }
    }
    void check(const FactorProduct& lhs, const FExpr& rhs) { check(FExpr(lhs), rhs); }
    void check(const FactorProduct& lhs, const FactorProduct& rhs) {
        check(FExpr(lhs), FExpr(rhs));
    }
};

template <typename Fn>
VerificationReport run(std::string identity, Params params, Fn&& body) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.params = std::move(params);
    auto start = std::chrono::steady_clock::now();
    Checker c;
    body(c);
    report.holds = c.ok;
    report.witness = std::move(c.witness);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

/// prod_{j=1}^{k} [z - j + 1] with the a-shift ladder of the standard model.
FactorProduct falling_ladder(int k) {
    FactorProduct out;
    for (int j = 1; j <= k; ++j) out *= f_aq_number({1, 1 - j}, 2 * (j - 1));
    return out;
}

const Monomial kQ = q_pow(1);
const Monomial kQ2 = q_pow(2);

FactorProduct qpfaff_lhs(int n, int r) {
    FactorProduct lhs;
    lhs.mul_poch(1, Monomial{2 * r, 0, 1}, kQ, n, +1);    // q^{z+r}
    lhs.mul_poch(1, Monomial{2 * r, -2, -1}, kQ, n, +1);  // a^{-1} q^{r-z}
    lhs.mul_poch(1, Monomial{0, -2, 0}, kQ, n, -1);       // a^{-1}
    lhs.mul_poch(1, Monomial{4 * r, 0, 0}, kQ, n, -1);    // q^{2r}
    return lhs;
}

FactorProduct qpfaff_summand(int n, int r, int k) {
    FactorProduct t;
    t.mul_poch(1, q_pow(-n), kQ, k, +1);
    t.mul_poch(1, Monomial{2 * r, 0, -1}, kQ, k, +1);  // q^{r-z}
    t.mul_poch(1, Monomial{2 * r, 2, 1}, kQ, k, +1);   // a q^{z+r}
    t.mul_poch(1, kQ, kQ, k, -1);
    t.mul_poch(1, q_pow(2 * r), kQ, k, -1);
    t.mul_poch(1, aq_pow(1 - n), kQ, k, -1);
    t.mul_mono(q_pow(k));
    return t;
}

FactorProduct jain_summand(int n, int k) {
    FactorProduct t;
    t.mul_poch(1, q_pow(-n), kQ, k, +1);
    t.mul_poch(-1, q_pow(-n), kQ, k, +1);
    t.mul_poch(1, Monomial{2, 0, 1}, kQ, k, +1);    // q^{z+1}
    t.mul_poch(1, Monomial{2, -2, -1}, kQ, k, +1);  // a^{-1} q^{1-z}
    t.mul_poch(1, kQ, kQ, k, -1);
    t.mul_poch(1, q_pow(-2 * n), kQ, k, -1);
    t.mul_poch(1, Monomial{3, -1, 0}, kQ, k, -1);   // a^{-1/2} q^{3/2}
    t.mul_poch(-1, Monomial{3, -1, 0}, kQ, k, -1);
    t.mul_mono(q_pow(k));
    return t;
}

FactorProduct whipple_summand(int n, int k) {
    FactorProduct t;
    t.mul_poch(1, q_pow(-n), kQ, k, +1);
    t.mul_poch(1, q_pow(n + 1), kQ, k, +1);
    t.mul_poch(1, Monomial{-2 * n - 1, 1, 0}, kQ, k, +1);  // a^{1/2} q^{-n-1/2}
    t.mul_poch(-1, Monomial{-2 * n - 1, 1, 0}, kQ, k, +1);
    t.mul_poch(1, kQ, kQ, k, -1);
    t.mul_poch(-1, kQ, kQ, k, -1);                       // -q
    t.mul_poch(1, Monomial{-2 * n, 0, -1}, kQ, k, -1);   // q^{-z-n}
    t.mul_poch(1, Monomial{-2 * n, 2, 1}, kQ, k, -1);    // a q^{z-n}
    t.mul_mono(q_pow(k));
    return t;
}

}  // namespace

VerificationReport verify_product_standard(const FerrersBoard& board) {
    return run("product-standard", {{"board", board.spec_string()}}, [&](Checker& c) {
        const int n = board.columns();
        FactorProduct lhs;
        for (int i = 1; i <= n; ++i)
            lhs *= f_aq_number({1, board.height(i) - i + 1}, 2 * (i - 1 - board.height(i)));
        FExpr rhs;
        for (int k = 0; k <= n; ++k)
            rhs += rook_standard_f(board, n - k) * falling_ladder(k);
        c.check(lhs, rhs);
    });
}

VerificationReport verify_lah_product(int n, int r) {
    if (r < 1 || r > n) throw InvalidFamilyParams("lah product needs 1 <= r <= n");
    return run("lah-product", {{"n", std::to_string(n)}, {"r", std::to_string(r)}},
               [&](Checker& c) {
                   FactorProduct lhs;
                   for (int i = 1; i <= n - r; ++i)
                       lhs *= f_aq_number({1, n - i}, 2 * (i - n));
                   for (int i = 1; i <= r; ++i)
                       lhs *= f_aq_number({1, 1 - i}, 2 * (i - 1));
                   FExpr rhs;
                   for (int k = r; k <= n; ++k)
                       rhs += lah_number_f(n, r, k) * falling_ladder(k);
                   c.check(lhs, rhs);
               });
}

VerificationReport verify_qpfaff(int n, int r) {
    if (n < 0) throw DegenerateParameters("qpfaff needs n >= 0");
    if (r < 1 && n >= 1) throw DegenerateParameters("qpfaff is singular for r < 1");
    return run("qpfaff", {{"n", std::to_string(n)}, {"r", std::to_string(r)}}, [&](Checker& c) {
        FExpr rhs;
        for (int k = 0; k <= n; ++k) rhs += FExpr(qpfaff_summand(n, r, k));
        c.check(qpfaff_lhs(n, r), rhs);
    });
}

VerificationReport verify_pfaff_standard_form(int n, int r) {
    if (n < 0) throw DegenerateParameters("pfaff-standard needs n >= 0");
    if (r < 1 && n >= 1) throw DegenerateParameters("pfaff-standard is singular for r < 1");
    return run("pfaff-standard", {{"n", std::to_string(n)}, {"r", std::to_string(r)}},
               [&](Checker& c) {
                   const Monomial A{2 * r, 2, 1};   // a q^{z+r}
                   const Monomial B{2 * r, 0, -1};  // q^{r-z}
                   const Monomial C{4 * r, 0, 0};   // q^{2r}
                   FactorProduct lhs;
                   lhs.mul_poch(1, C / A, kQ, n, +1);
                   lhs.mul_poch(1, C / B, kQ, n, +1);
                   lhs.mul_poch(1, C, kQ, n, -1);
                   lhs.mul_poch(1, C / (A * B), kQ, n, -1);
                   c.check(lhs, FExpr(qpfaff_lhs(n, r)));
                   for (int k = 0; k <= n && c.ok; ++k) {
                       FactorProduct t;
                       t.mul_poch(1, A, kQ, k, +1);
                       t.mul_poch(1, B, kQ, k, +1);
                       t.mul_poch(1, q_pow(-n), kQ, k, +1);
                       t.mul_poch(1, kQ, kQ, k, -1);
                       t.mul_poch(1, C, kQ, k, -1);
                       t.mul_poch(1, (A * B / C) * q_pow(1 - n), kQ, k, -1);
                       t.mul_mono(q_pow(k));
                       c.check(t, qpfaff_summand(n, r, k));
                   }
               });
}

VerificationReport verify_jain(int n) {
    if (n < 0) throw DegenerateParameters("jain needs n >= 0");
    return run("jain", {{"n", std::to_string(n)}}, [&](Checker& c) {
        FactorProduct lhs;
        lhs.mul_poch(1, Monomial{4, 0, 1}, kQ2, n, +1);    // q^{z+2}
        lhs.mul_poch(1, Monomial{4, -2, -1}, kQ2, n, +1);  // a^{-1} q^{2-z}
        lhs.mul_poch(1, kQ, kQ2, n, -1);
        lhs.mul_poch(1, Monomial{6, -2, 0}, kQ2, n, -1);   // a^{-1} q^3
        FExpr rhs;
        for (int k = 0; k <= n; ++k) rhs += FExpr(jain_summand(n, k));
        c.check(lhs, rhs);
    });
}

VerificationReport verify_whipple_special(int n) {
    if (n < 0) throw DegenerateParameters("whipple needs n >= 0");
    return run("whipple", {{"n", std::to_string(n)}}, [&](Checker& c) {
        FactorProduct lhs;
        lhs.mul_poch(1, Monomial{4, 0, 1}, kQ2, n, +1);       // q^{z+2}
        lhs.mul_poch(1, Monomial{-4 * n, 2, 1}, kQ2, n, +1);  // a q^{z-2n}
        lhs.mul_poch(1, Monomial{2, 0, 1}, kQ, n, -1);        // q^{z+1}
        lhs.mul_poch(1, Monomial{-2 * n, 2, 1}, kQ, n, -1);   // a q^{z-n}
        FExpr rhs;
        for (int k = 0; k <= n; ++k) rhs += FExpr(whipple_summand(n, k));
        c.check(lhs, rhs);
    });
}

VerificationReport verify_reversal(int n) {
    if (n < 0) throw DegenerateParameters("reversal needs n >= 0");
    return run("reversal", {{"n", std::to_string(n)}}, [&](Checker& c) {
        FExpr sum1, sum2;
        for (int k = 0; k <= n; ++k) {
            sum1 += FExpr(jain_summand(n, k));
            sum2 += FExpr(whipple_summand(n, k));
        }
        for (int k = 0; k <= n && c.ok; ++k)
            c.check(FExpr(jain_summand(n, k)) * sum2,
                    FExpr(whipple_summand(n, n - k)) * sum1);
    });
}

VerificationReport verify_product_alpha(const FerrersBoard& board, int alpha) {
    if (alpha < 0) throw InvalidFamilyParams("alpha must be a nonnegative integer");
    return run("product-alpha",
               {{"board", board.spec_string()}, {"alpha", std::to_string(alpha)}},
               [&](Checker& c) {
                   const int n = board.columns();
                   FactorProduct lhs;
                   for (int j = 1; j <= n; ++j) {
                       int off = board.height(j) + (j - 1) * (alpha - 1);
                       lhs *= f_aq_number({1, off}, -2 * off);
                   }
                   FExpr rhs;
                   for (int k = 0; k <= n; ++k) {
                       FactorProduct ladder;
                       for (int i = 1; i <= k; ++i) {
                           int off = (i - 1) * (alpha - 1);
                           ladder *= f_aq_number({1, off}, -2 * off);
                       }
                       rhs += rook_alpha_f(board, n - k, alpha) * ladder;
                   }
                   c.check(lhs, rhs);
               });
}

VerificationReport verify_product_matching(const ShiftedBoard& board) {
    return run("product-matching", {{"board", board.spec_string()}}, [&](Checker& c) {
        const int n = board.n();
        FactorProduct lhs;
        for (int i = 1; i <= 2 * n - 1; ++i) {
            int arm = board.arm(2 * n - i);
            lhs *= f_aq_number({1, arm - 2 * i + 2}, 2 * (2 * i - 2 - arm));
        }
        FExpr rhs;
        for (int k = 0; k <= n; ++k) {
            FactorProduct ladder;
            for (int j = 1; j <= 2 * n - 1 - k; ++j)
                ladder *= f_aq_number({1, 2 - 2 * j}, 4 * j - 4);
            rhs += rook_matching_f(board, k) * ladder;
        }
        c.check(lhs, rhs);
    });
}

VerificationReport verify_matching_saalschutz(int n) {
    if (n < 0) throw DegenerateParameters("matching-saalschutz needs n >= 0");
    return run("matching-saalschutz", {{"n", std::to_string(n)}}, [&](Checker& c) {
        // Final form, half powers of q carried by s. The last denominator
        // base is a q^{z+n-1}: that is what C/AB evaluates to for
        // A = q^{-n+1/2}, B = q^{5/2-2n}/a, C = q^{z-2n+2}, and the identity
        // is false with the half power there.
        FactorProduct lhs;
        lhs.mul_poch(1, Monomial{3 - 2 * n, 0, 1}, kQ, n, +1);   // q^{z-n+3/2}
        lhs.mul_poch(1, Monomial{-1, 2, 1}, kQ, n, +1);          // a q^{z-1/2}
        lhs.mul_poch(1, Monomial{4 - 4 * n, 0, 1}, kQ, n, -1);   // q^{z-2n+2}
        lhs.mul_poch(1, Monomial{2 * n - 2, 2, 1}, kQ, n, -1);   // a q^{z+n-1}
        FExpr rhs;
        for (int k = 0; k <= n; ++k) {
            FactorProduct t;
            t.mul_poch(1, q_pow(-n), kQ, k, +1);
            t.mul_poch(1, Monomial{1 - 2 * n, 0, 0}, kQ, k, +1);     // q^{-n+1/2}
            t.mul_poch(1, Monomial{5 - 4 * n, -2, 0}, kQ, k, +1);    // q^{5/2-2n} / a
            t.mul_poch(1, kQ, kQ, k, -1);
            t.mul_poch(1, Monomial{4 - 4 * n, 0, 1}, kQ, k, -1);     // q^{z-2n+2}
            t.mul_poch(1, Monomial{4 - 4 * n, -2, -1}, kQ, k, -1);   // q^{2-2n-z} / a
            t.mul_mono(q_pow(k));
            rhs += FExpr(t);
        }
        c.check(lhs, rhs);

        // Intermediate base-q^2 form the final one is the s |-> q, z |-> 2z
        // image of.
        FactorProduct lhs2;
        lhs2.mul_poch(1, Monomial{-4, 0, -1}, kQ, 2 * n, +1);   // q^{-z-2}
        lhs2.mul_poch(1, Monomial{-4, 2, 1}, kQ, 2 * n, +1);    // a q^{z-2}
        lhs2.mul_poch(1, Monomial{-4, 0, -1}, kQ2, 2 * n, -1);
        lhs2.mul_poch(1, Monomial{-4, 2, 1}, kQ2, 2 * n, -1);
        lhs2.mul_mono(q_pow(n * (2 * n - 1)));
        FExpr rhs2;
        for (int k = 0; k <= n; ++k) {
            FactorProduct t;
            t.mul_poch(1, q_pow(-2 * n), kQ2, k, +1);
            t.mul_poch(1, q_pow(1 - 2 * n), kQ2, k, +1);
            t.mul_poch(1, Monomial{10 - 8 * n, -2, 0}, kQ2, k, +1);   // q^{5-4n} / a
            t.mul_poch(1, q_pow(2), kQ2, k, -1);
            t.mul_poch(1, Monomial{8 - 8 * n, 0, 1}, kQ2, k, -1);     // q^{z-4n+4}
            t.mul_poch(1, Monomial{8 - 8 * n, -2, -1}, kQ2, k, -1);   // q^{4-4n-z} / a
            t.mul_mono(q_pow(2 * k));
            rhs2 += FExpr(t);
        }
        c.check(lhs2, rhs2);
    });
}

VerificationReport verify_binomial_recursions(int n_max) {
    if (n_max < 0) throw DegenerateParameters("binomial-recursions needs n_max >= 0");
    return run("binomial-recursions", {{"n", std::to_string(n_max)}}, [&](Checker& c) {
        c.check(f_aq_binomial(0, 0), FactorProduct(Rational(1)));
        for (int n = 0; n < n_max && c.ok; ++n) {
            for (int k = 0; k <= n + 1 && c.ok; ++k) {
                FactorProduct coef1;
                coef1.mul_factor(1, aq_pow(2 * n + 2 - k), +1);
                coef1.mul_factor(1, aq_pow(k), -1);
                coef1.mul_mono(q_pow(k - n - 1));
                FExpr rhs1 = FExpr(f_aq_binomial(n, k));
                rhs1 += FExpr(f_aq_binomial(n, k - 1)) * coef1;
                c.check(FExpr(f_aq_binomial(n + 1, k)), rhs1);

                FactorProduct coef2;
                coef2.mul_factor(1, aq_pow(n + 1 + k), +1);
                coef2.mul_factor(1, aq_pow(n + 1 - k), -1);
                coef2.mul_mono(q_pow(-k));
                FExpr rhs2 = FExpr(f_aq_binomial(n, k)) * coef2;
                rhs2 += FExpr(f_aq_binomial(n, k - 1));
                c.check(FExpr(f_aq_binomial(n + 1, k)), rhs2);
            }
        }
        for (int n = 0; n <= n_max && c.ok; ++n)
            for (int k = 0; k <= n && c.ok; ++k)
                c.check(f_aq_binomial(n, k), f_aq_binomial(n, n - k));
    });
}

}  // namespace aqrook
