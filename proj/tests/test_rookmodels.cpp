#include <doctest.h>

#include "aqrook/rookmodels.hpp"
#include "test_support.hpp"

using namespace aqrook;
using namespace testsupport;

namespace {

RatExpr frac(const LaurentPoly& num, const LaurentPoly& den) { return RatExpr(num, den); }

}  // namespace

TEST_CASE("standard rook numbers by enumeration") {
    FerrersBoard one = rectangle(1, 1);
    CHECK(ratexpr_equal(rook_standard(one, 1), RatExpr(1)));
    // Single empty placement leaves the lone cell uncancelled with weight w(0).
    RatExpr w0 = frac(mono(1, -2) * one_minus(1, 2, 2), one_minus(1, -2, 2));
    CHECK(ratexpr_equal(rook_standard(one, 0), w0));

    RatExpr expect22 = frac(mono(1, -2) * (LaurentPoly(1) + mono(1, 2)) * one_minus(1, -4, 2),
                            one_minus(1, -6, 2));
    CHECK(ratexpr_equal(rook_standard(rectangle(2, 2), 2), expect22));

    CHECK(ratexpr_equal(rook_standard(FerrersBoard(), 0), RatExpr(1)));
    CHECK(rook_standard(FerrersBoard(), 1).is_zero());
    CHECK(rook_standard(rectangle(2, 2), 3).is_zero());
}

TEST_CASE("rectangle closed form") {
    CHECK(ratexpr_equal(closed_rect(1, 1, 1), RatExpr(1)));
    RatExpr w0 = frac(mono(1, -2) * one_minus(1, 2, 2), one_minus(1, -2, 2));
    CHECK(ratexpr_equal(closed_rect(1, 1, 0), w0));
    CHECK(closed_rect(2, 2, 3).is_zero());
    CHECK(closed_rect(2, 2, -1).is_zero());
    for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m)
            for (int k = 0; k <= std::min(l, m); ++k)
                CHECK(ratexpr_equal(rook_standard(rectangle(l, m), k), closed_rect(l, m, k)));
}

TEST_CASE("column recursion") {
    CHECK(recur_standard_check(FerrersBoard(), 1));
    CHECK(recur_standard_check(rectangle(1, 1), 2));
    CHECK(recur_standard_check(staircase(3), 3));
    CHECK(recur_standard_check(ferrers({1, 2}), 4));
    CHECK_THROWS_AS(recur_standard_check(rectangle(2, 3), 1), NotFerrersAfterAppend);
}

TEST_CASE("restricted Lah numbers") {
    CHECK(ratexpr_equal(lah_number(1, 1, 1), RatExpr(1)));
    CHECK(lah_number(2, 1, -1).is_zero());
    CHECK(lah_number(2, 1, 3).is_zero());
    CHECK(ratexpr_equal(lah_number(0, 1, 0), RatExpr(1)));  // artificial base L(r-1, r-1) = 1
    CHECK(lah_number(1, 2, 0).is_zero());
    CHECK(ratexpr_equal(lah_number(1, 2, 1), RatExpr(1)));

    CHECK(ratexpr_equal(closed_lah(1, 1, 1), RatExpr(1)));
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= std::min(n, 2); ++r)
            for (int k = r - 1; k <= n; ++k)
                CHECK(ratexpr_equal(lah_number(n, r, k), closed_lah(n, r, k)));
    CHECK(ratexpr_equal(lah_number(3, 2, 2), closed_lah(3, 2, 2)));

    CHECK(recur_lah_check(1, 1));
    CHECK(recur_lah_check(3, 1));
    CHECK(recur_lah_check(3, 2));
    CHECK_THROWS_AS(recur_lah_check(2, 3), InvalidFamilyParams);
}

TEST_CASE("alpha model rook numbers") {
    CHECK(ratexpr_equal(rook_alpha(staircase(2), 1, 2), RatExpr(1)));
    RatExpr expect = frac(mono(1, -2) * one_minus(1, -2, 2), one_minus(1, -6, 2));
    CHECK(ratexpr_equal(rook_alpha(staircase(2), 0, 2), expect));

    for (const auto& board : enumerate_ferrers(2, 2))
        for (int k = 0; k <= 2; ++k)
            CHECK(ratexpr_equal(rook_alpha(board, k, 0), rook_standard(board, k)));
}

TEST_CASE("alpha = 2 staircase closed form") {
    CHECK(ratexpr_equal(closed_staircase2(2, 1), RatExpr(1)));
    RatExpr expect = frac(mono(1, -2) * one_minus(1, -2, 2), one_minus(1, -6, 2));
    CHECK(ratexpr_equal(closed_staircase2(2, 0), expect));
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(ratexpr_equal(closed_staircase2(n, k), rook_alpha(staircase(n), k, 2)));
}

TEST_CASE("classical alpha row weights factorize") {
    // prod_j (z + b_j + (j-1)(alpha-1)) = sum_k r_k z (z+alpha-1) ... over
    // integer points.
    for (const FerrersBoard& board : {staircase(3), rectangle(2, 2), ferrers({1, 2, 2})})
        for (int alpha = 0; alpha <= 3; ++alpha)
            for (long z = 0; z <= 4; ++z) {
                const int n = board.columns();
                long lhs = 1;
                for (int j = 1; j <= n; ++j) lhs *= z + board.height(j) + (j - 1) * (alpha - 1);
                long rhs = 0;
                for (int k = 0; k <= n; ++k) {
                    long rk = 0;
                    for (const Placement& p : file_placements(board, k))
                        rk += classical_alpha_weight(p, alpha);
                    long ladder = 1;
                    for (int i = 0; i < n - k; ++i) ladder *= z + i * (alpha - 1);
                    rhs += rk * ladder;
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("matching model rook numbers") {
    CHECK(ratexpr_equal(rook_matching(matching_full(1), 1), RatExpr(1)));
    RatExpr w0 = frac(mono(1, -2) * one_minus(1, 2, 2), one_minus(1, -2, 2));
    CHECK(ratexpr_equal(rook_matching(matching_full(1), 0), w0));
    CHECK(rook_matching(matching_full(2), 3).is_zero());

    CHECK(ratexpr_equal(closed_matching(1, 1), RatExpr(1)));
    CHECK(ratexpr_equal(closed_matching(1, 0), w0));
    for (int n = 1; n <= 2; ++n)
        for (int k = 0; k <= n + 1; ++k)
            CHECK(ratexpr_equal(closed_matching(n, k), rook_matching(matching_full(n), k)));

    CHECK(recur_matching_check(2));
    CHECK(recur_matching_check(4));
    CHECK_THROWS_AS(recur_matching_check(3), InvalidFamilyParams);
}

TEST_CASE("q-limit of rook numbers") {
    CHECK(q_rook_limit_check(rectangle(1, 1), 0));
    CHECK(q_rook_limit_check(rectangle(2, 2), 1));
    CHECK(q_rook_limit_check(staircase(3), 2));
    // Every rook number keeps even b-exponents only.
    for (const auto& board : enumerate_ferrers(2, 2))
        for (int k = 0; k <= 2; ++k) {
            RatExpr r = rook_standard(board, k);
            for (const auto& [m, c] : r.num().terms()) CHECK(m.eb % 2 == 0);
            for (const auto& [m, c] : r.den().terms()) CHECK(m.eb % 2 == 0);
        }
}

TEST_CASE("shared-denominator sums match naive pairwise addition") {
    // Oracle: the same weight products summed with plain unreduced RatExpr
    // arithmetic (denominators multiply term by term).
    auto naive_standard = [](const FerrersBoard& board, int k) {
        RatExpr total(0);
        for (const Placement& p : nonattacking(board, k)) {
            RatExpr w(1);
            for (const Cell& c : uncancelled_standard(board, p))
                w *= small_weight(c.col - c.row - nw_rooks(p, c));
            total += w;
        }
        return total;
    };
    auto naive_matching = [](const ShiftedBoard& board, int k) {
        RatExpr total(0);
        for (const Placement& p : matchings(board, k)) {
            RatExpr w(1);
            for (const Cell& c : uncancelled_matching(board, p)) {
                MatchingStats st = matching_stats(p, c);
                int hat_i = board.vertices() - c.row;
                int hat_j = board.vertices() - c.col;
                w *= small_weight(hat_i + hat_j - 1 - 2 * st.r - st.s);
            }
            total += w;
        }
        return total;
    };
    for (const auto& board : enumerate_ferrers(2, 2))
        for (int k = 0; k <= 2; ++k)
            CHECK(ratexpr_equal(rook_standard(board, k), naive_standard(board, k)));
    for (const auto& board : enumerate_shifted(2))
        for (int k = 0; k <= 2; ++k)
            CHECK(ratexpr_equal(rook_matching(board, k), naive_matching(board, k)));
}

TEST_CASE("rook number records") {
    RookNumber r = compute_rook_number(rectangle(2, 2), RookModel::standard, 1);
    CHECK(r.k == 1);
    CHECK(ratexpr_equal(r.value, rook_standard(rectangle(2, 2), 1)));
    RookNumber m = compute_rook_number(matching_full(2), RookModel::matching, 2);
    CHECK(ratexpr_equal(m.value, closed_matching(2, 2)));
    RookNumber a = compute_rook_number(staircase(3), RookModel::alpha, 1, 2);
    CHECK(ratexpr_equal(a.value, closed_staircase2(3, 1)));
    CHECK_THROWS_AS(compute_rook_number(staircase(3), RookModel::matching, 1),
                    InvalidFamilyParams);
}

TEST_CASE("maximum placement sizes") {
    CHECK(max_rooks(staircase(3), Model::nonattacking) == 2);
    CHECK(max_rooks(staircase(3), Model::file) == 2);
    CHECK(max_rooks(rectangle(3, 2), Model::nonattacking) == 2);
    CHECK(max_rooks(rectangle(3, 2), Model::file) == 3);
    CHECK(max_rooks(FerrersBoard(), Model::nonattacking) == 0);
    CHECK(max_rooks(matching_full(2)) == 2);
}
