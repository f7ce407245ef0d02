#include <doctest.h>

#include "aqrook/identities.hpp"
#include "aqrook/report_json.hpp"

using namespace aqrook;

TEST_CASE("standard product formula") {
    CHECK(verify_product_standard(ferrers({0})).holds);
    CHECK(verify_product_standard(rectangle(1, 1)).holds);
    CHECK(verify_product_standard(staircase(4)).holds);
    CHECK(verify_product_standard(ferrers({1, 1, 3})).holds);
}

TEST_CASE("lah product formula") {
    CHECK(verify_lah_product(1, 1).holds);
    CHECK(verify_lah_product(3, 1).holds);
    CHECK(verify_lah_product(3, 2).holds);
    CHECK_THROWS_AS(verify_lah_product(2, 3), InvalidFamilyParams);
}

TEST_CASE("q-Pfaff-Saalschutz") {
    CHECK(verify_qpfaff(0, 1).holds);
    CHECK(verify_qpfaff(1, 1).holds);
    CHECK(verify_qpfaff(5, 2).holds);
    CHECK_THROWS_AS(verify_qpfaff(2, 0), DegenerateParameters);
}

TEST_CASE("standard-form q-Pfaff-Saalschutz") {
    CHECK(verify_pfaff_standard_form(1, 1).holds);
    CHECK(verify_pfaff_standard_form(3, 1).holds);
    CHECK(verify_pfaff_standard_form(3, 2).holds);
    CHECK_THROWS_AS(verify_pfaff_standard_form(1, 0), DegenerateParameters);
}

TEST_CASE("Jain summation") {
    CHECK(verify_jain(0).holds);
    CHECK(verify_jain(1).holds);
    CHECK(verify_jain(4).holds);
}

TEST_CASE("Whipple summation") {
    CHECK(verify_whipple_special(0).holds);
    CHECK(verify_whipple_special(1).holds);
    CHECK(verify_whipple_special(4).holds);
}

TEST_CASE("sum reversal between Jain and Whipple") {
    CHECK(verify_reversal(0).holds);
    CHECK(verify_reversal(2).holds);
    CHECK(verify_reversal(4).holds);
}

TEST_CASE("alpha product formula") {
    for (int alpha = 0; alpha <= 3; ++alpha) CHECK(verify_product_alpha(ferrers({0}), alpha).holds);
    CHECK(verify_product_alpha(staircase(3), 2).holds);
    CHECK(verify_product_alpha(rectangle(2, 2), 3).holds);
    CHECK_THROWS_AS(verify_product_alpha(staircase(2), -1), InvalidFamilyParams);
}

TEST_CASE("matching product formula") {
    CHECK(verify_product_matching(matching_full(1)).holds);
    CHECK(verify_product_matching(matching_full(2)).holds);
    CHECK(verify_product_matching(shifted({3, 1, 0}, 2)).holds);
}

TEST_CASE("matching summation with intermediate form") {
    CHECK(verify_matching_saalschutz(0).holds);
    CHECK(verify_matching_saalschutz(1).holds);
    CHECK(verify_matching_saalschutz(3).holds);
}

TEST_CASE("binomial recursions and symmetry") {
    CHECK(verify_binomial_recursions(1).holds);
    CHECK(verify_binomial_recursions(6).holds);
}

TEST_CASE("vanishing mechanism that terminates the sums") {
    // (q^{-n}; q)_k dies at k = n + 1.
    for (int n = 1; n <= 4; ++n) {
        CHECK(f_poch(1, q_pow(-n), q_pow(1), n + 1).is_zero());
        CHECK_FALSE(f_poch(1, q_pow(-n), q_pow(1), n).is_zero());
        // (-q^{-n}; q)_{n+1} merely folds a constant 2.
        CHECK_FALSE(f_poch(-1, q_pow(-n), q_pow(1), n + 1).is_zero());
    }
    // A vanishing factor demanded in a denominator is a division by zero.
    CHECK_THROWS_AS(f_poch(1, q_pow(-2), q_pow(1), 3, -1), DivisionByZero);
}

TEST_CASE("alpha = 0 product matches the standard product factor by factor") {
    for (const auto& board : enumerate_ferrers(3, 3)) {
        for (int j = 1; j <= board.columns(); ++j) {
            int b = board.height(j);
            FactorProduct std_factor = f_aq_number({1, b - j + 1}, 2 * (j - 1 - b));
            FactorProduct alpha_factor = f_aq_number({1, b + (j - 1) * (0 - 1)},
                                                     -2 * (b + (j - 1) * (0 - 1)));
            CHECK(fexpr_equal(FExpr(std_factor), FExpr(alpha_factor)));
        }
    }
}

TEST_CASE("lah product is the substituted standard product") {
    // Cross ratio of the two identities: substituting a -> a q^{2(1-r)} into
    // the standard product for the Lah board gives an identity equivalent to
    // the Lah product.
    for (auto [n, r] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 2}}) {
        FerrersBoard board = lah_board(n, r);
        const int cols = board.columns();
        FactorProduct lhs_std;
        for (int i = 1; i <= cols; ++i)
            lhs_std *= f_aq_number({1, board.height(i) - i + 1}, 2 * (i - 1 - board.height(i)));
        FExpr rhs_std;
        for (int k = 0; k <= cols; ++k) {
            FactorProduct ladder;
            for (int j = 1; j <= k; ++j) ladder *= f_aq_number({1, 1 - j}, 2 * (j - 1));
            rhs_std += rook_standard_f(board, cols - k) * ladder;
        }
        FExpr lhs_sub = FExpr(lhs_std.substituted_a(2 * (1 - r)));
        FExpr rhs_sub = rhs_std.substituted_a(2 * (1 - r));

        FactorProduct lhs_lah;
        for (int i = 1; i <= n - r; ++i) lhs_lah *= f_aq_number({1, n - i}, 2 * (i - n));
        for (int i = 1; i <= r; ++i) lhs_lah *= f_aq_number({1, 1 - i}, 2 * (i - 1));
        FExpr rhs_lah;
        for (int k = r; k <= n; ++k) {
            FactorProduct ladder;
            for (int j = 1; j <= k; ++j) ladder *= f_aq_number({1, 1 - j}, 2 * (j - 1));
            rhs_lah += lah_number_f(n, r, k) * ladder;
        }
        CHECK(fexpr_equal(lhs_sub * rhs_lah, FExpr(lhs_lah) * rhs_sub));
    }
}

TEST_CASE("report fields and JSON round trip") {
    VerificationReport report = verify_qpfaff(2, 1);
    CHECK(report.holds);
    CHECK(report.identity == "qpfaff");
    CHECK(report.params ==
          std::vector<std::pair<std::string, std::string>>{{"n", "2"}, {"r", "1"}});
    CHECK(report.elapsed_ms >= 0.0);
    CHECK_FALSE(report.witness.has_value());

    VerificationReport back = report_from_json(report_to_json(report));
    CHECK(back.identity == report.identity);
    CHECK(back.holds == report.holds);
    CHECK(back.params == report.params);

    VerificationReport failing;
    failing.identity = "example";
    failing.params = {{"n", "1"}};
    failing.holds = false;
    failing.witness = {{"(1)/(1-s^2)", "(1)/(1-s^4)"}};
    failing.elapsed_ms = 1.5;
    VerificationReport failing_back = report_from_json(report_to_json(failing));
    CHECK(failing_back.holds == false);
    REQUIRE(failing_back.witness.has_value());
    CHECK(failing_back.witness->first == "(1)/(1-s^2)");
    CHECK(failing_back.witness->second == "(1)/(1-s^4)");
}
