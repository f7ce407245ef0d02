#include "aqrook/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>

#include "aqrook/identities.hpp"
#include "aqrook/report_json.hpp"

namespace aqrook {

namespace {

using Task = std::function<std::optional<std::string>()>;

/// Runs tasks on `workers` threads; failure messages come back in task
/// order, so output is independent of the worker count. A throwing task is
/// reported as a failure rather than tearing down the process.
std::vector<std::string> run_tasks(const std::vector<Task>& tasks, int workers) {
    std::vector<std::optional<std::string>> slots(tasks.size());
    auto run_one = [&tasks, &slots](std::size_t i) {
        try {
            slots[i] = tasks[i]();
        } catch (const std::exception& e) {
            slots[i] = std::string("exception: ") + e.what();
        }
    };
    workers = std::max(1, workers);
    if (workers == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                run_one(i);
            }
        };
        std::vector<std::thread> pool;
        int spawn = std::min<int>(workers, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<std::size_t>(spawn));
        for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<std::string> failures;
    for (const auto& slot : slots)
        if (slot) failures.push_back(*slot);
    return failures;
}

CriterionResult run_criterion(int index, std::string name, const std::vector<Task>& tasks,
                              int workers) {
    CriterionResult result;
    result.index = index;
    result.name = std::move(name);
    result.checks = static_cast<int>(tasks.size());
    auto start = std::chrono::steady_clock::now();
    result.failures = run_tasks(tasks, workers);
    result.pass = result.failures.empty();
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

std::optional<std::string> expect(bool ok, const std::string& what) {
    if (ok) return std::nullopt;
    return what;
}

std::optional<std::string> expect_report(const VerificationReport& report) {
    if (report.holds) return std::nullopt;
    std::string what = report.identity + " fails at";
    for (const auto& [k, v] : report.params) what += " " + k + "=" + v;
    return what;
}

long factorial(int n) {
    long out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

long double_factorial_odd(int n) {  // (2n-1)!!
    long out = 1;
    for (int i = 1; i <= 2 * n - 1; i += 2) out *= i;
    return out;
}

/// Elementary symmetric function e_k of the column heights.
long elementary_symmetric(const std::vector<int>& values, int k) {
    std::vector<long> e(static_cast<std::size_t>(k) + 1, 0);
    e[0] = 1;
    for (int v : values)
        for (int j = k; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
    return e[static_cast<std::size_t>(k)];
}

}  // namespace

void SuiteBounds::clamp_to(int max_n) {
    max_n = std::max(1, max_n);
    auto cap = [max_n](int& v) { v = std::min(v, max_n); };
    cap(rect_max);
    cap(ferrers_cols);
    cap(ferrers_height);
    append_max = std::min(append_max, max_n + 1);
    cap(lah_n);
    cap(lah_recur_n);
    cap(alpha_cols);
    cap(alpha_height);
    cap(stair2_n);
    cap(match_closed_n);
    match_recur_max = std::min(match_recur_max, 2 * max_n);
    cap(match_boards_n);
    match_big_board = match_big_board && max_n >= 4;
    cap(qpfaff_n);
    cap(qpfaff_r);
    cap(jain_n);
    cap(whipple_n);
    cap(msaal_n);
    cap(reversal_n);
    cap(binom_n);
    cap(wmult_range);
    cap(split_y);
    cap(limit_cols);
    cap(limit_height);
    cap(counts_n);
}

std::vector<CriterionResult> run_suite(const SuiteBounds& bounds, int workers) {
    std::vector<CriterionResult> out;

    {  // 1. closed form on rectangles
        std::vector<Task> tasks;
        for (int l = 1; l <= bounds.rect_max; ++l)
            for (int m = 1; m <= bounds.rect_max; ++m)
                tasks.push_back([l, m] {
                    for (int k = 0; k <= std::min(l, m); ++k)
                        if (!ratexpr_equal(rook_standard(rectangle(l, m), k), closed_rect(l, m, k)))
                            return expect(false, "rectangle " + std::to_string(l) + "x" +
                                                     std::to_string(m) + " k=" + std::to_string(k));
                    return std::optional<std::string>{};
                });
        out.push_back(run_criterion(1, "rectangle closed form", tasks, workers));
    }

    {  // 2. standard product formula, exhaustive boards
        std::vector<Task> tasks;
        for (const auto& board : enumerate_ferrers(bounds.ferrers_cols, bounds.ferrers_height))
            tasks.push_back([board] { return expect_report(verify_product_standard(board)); });
        out.push_back(run_criterion(2, "standard product formula", tasks, workers));
    }

    {  // 3. column recursion
        std::vector<Task> tasks;
        for (const auto& board : enumerate_ferrers(bounds.ferrers_cols, bounds.ferrers_height))
            for (int m = board.max_height(); m <= bounds.append_max; ++m)
                tasks.push_back([board, m] {
                    return expect(recur_standard_check(board, m),
                                  "column recursion fails: board=" + board.spec_string() +
                                      " m=" + std::to_string(m));
                });
        out.push_back(run_criterion(3, "column recursion", tasks, workers));
    }

    {  // 4. restricted Lah numbers
        std::vector<Task> tasks;
        for (int n = 1; n <= bounds.lah_n; ++n)
            for (int r = 1; r <= n; ++r) {
                tasks.push_back([n, r] {
                    for (int k = r - 2; k <= n + 1; ++k)
                        if (!ratexpr_equal(lah_number(n, r, k), closed_lah(n, r, k)))
                            return expect(false, "lah closed form fails: n=" + std::to_string(n) +
                                                     " r=" + std::to_string(r) +
                                                     " k=" + std::to_string(k));
                    return std::optional<std::string>{};
                });
                tasks.push_back([n, r] { return expect_report(verify_lah_product(n, r)); });
                if (n <= bounds.lah_recur_n)
                    tasks.push_back([n, r] {
                        return expect(recur_lah_check(n, r),
                                      "lah recursion fails: n=" + std::to_string(n) +
                                          " r=" + std::to_string(r));
                    });
            }
        out.push_back(run_criterion(4, "restricted Lah numbers", tasks, workers));
    }

    {  // 5. alpha-parameter model
        std::vector<Task> tasks;
        auto boards = enumerate_ferrers(bounds.alpha_cols, bounds.alpha_height);
        for (const auto& board : boards)
            for (int alpha = 0; alpha <= 3; ++alpha)
                tasks.push_back(
                    [board, alpha] { return expect_report(verify_product_alpha(board, alpha)); });
        for (const auto& board : boards)
            tasks.push_back([board] {
                for (int k = 0; k <= board.columns(); ++k)
                    if (!ratexpr_equal(rook_alpha(board, k, 0), rook_standard(board, k)))
                        return expect(false, "alpha=0 degeneration fails: board=" +
                                                 board.spec_string() + " k=" + std::to_string(k));
                return std::optional<std::string>{};
            });
        for (int n = 1; n <= bounds.stair2_n; ++n)
            tasks.push_back([n] {
                for (int k = 0; k <= n; ++k)
                    if (!ratexpr_equal(rook_alpha(staircase(n), k, 2), closed_staircase2(n, k)))
                        return expect(false, "staircase closed form fails: n=" + std::to_string(n) +
                                                 " k=" + std::to_string(k));
                return std::optional<std::string>{};
            });
        out.push_back(run_criterion(5, "alpha-parameter model", tasks, workers));
    }

    {  // 6. matching model
        std::vector<Task> tasks;
        for (int n = 1; n <= bounds.match_closed_n; ++n)
            tasks.push_back([n] {
                for (int k = 0; k <= n + 1; ++k)
                    if (!ratexpr_equal(rook_matching(matching_full(n), k), closed_matching(n, k)))
                        return expect(false, "matching closed form fails: n=" + std::to_string(n) +
                                                 " k=" + std::to_string(k));
                return std::optional<std::string>{};
            });
        for (int N = 2; N <= bounds.match_recur_max; N += 2)
            tasks.push_back([N] {
                return expect(recur_matching_check(N),
                              "matching recursion fails: N=" + std::to_string(N));
            });
        for (const auto& board : enumerate_shifted(bounds.match_boards_n))
            tasks.push_back([board] { return expect_report(verify_product_matching(board)); });
        if (bounds.match_big_board)
            tasks.push_back([] {
                return expect_report(verify_product_matching(shifted({7, 5, 4, 2, 0, 0, 0}, 4)));
            });
        out.push_back(run_criterion(6, "matching model", tasks, workers));
    }

    {  // 7. hypergeometric summations
        std::vector<Task> tasks;
        for (int n = 0; n <= bounds.qpfaff_n; ++n)
            for (int r = 1; r <= bounds.qpfaff_r; ++r) {
                tasks.push_back([n, r] { return expect_report(verify_qpfaff(n, r)); });
                tasks.push_back([n, r] { return expect_report(verify_pfaff_standard_form(n, r)); });
            }
        for (int n = 0; n <= bounds.jain_n; ++n)
            tasks.push_back([n] { return expect_report(verify_jain(n)); });
        for (int n = 0; n <= bounds.whipple_n; ++n)
            tasks.push_back([n] { return expect_report(verify_whipple_special(n)); });
        for (int n = 0; n <= bounds.msaal_n; ++n)
            tasks.push_back([n] { return expect_report(verify_matching_saalschutz(n)); });
        for (int n = 0; n <= bounds.reversal_n; ++n)
            tasks.push_back([n] { return expect_report(verify_reversal(n)); });
        out.push_back(run_criterion(7, "hypergeometric summations", tasks, workers));
    }

    {  // 8. weight algebra
        std::vector<Task> tasks;
        tasks.push_back(
            [&bounds] { return expect_report(verify_binomial_recursions(bounds.binom_n)); });
        tasks.push_back([&bounds] {
            for (int k = -bounds.wmult_range; k <= bounds.wmult_range; ++k)
                for (int n = -bounds.wmult_range; n <= bounds.wmult_range; ++n)
                    if (!fexpr_equal(FExpr(f_big_weight(k + n, 0)),
                                     FExpr(f_big_weight(k, 0) * f_big_weight(n, 2 * k))))
                        return expect(false, "W multiplicativity fails at k=" + std::to_string(k) +
                                                 " n=" + std::to_string(n));
            return std::optional<std::string>{};
        });
        tasks.push_back([&bounds] {
            for (int y = 0; y <= bounds.split_y; ++y) {
                FExpr rhs(f_aq_number({0, y}, 0));
                rhs += FExpr(f_big_weight(y, 0) * f_aq_number({1, 0}, 2 * y));
                if (!fexpr_equal(FExpr(f_aq_number({1, y}, 0)), rhs))
                    return expect(false, "[y+z] splitting fails at y=" + std::to_string(y));
            }
            return std::optional<std::string>{};
        });
        tasks.push_back([] {
            RatExpr q = RatExpr::from_monomial(1, q_pow(1));
            for (int k = -3; k <= 3; ++k) {
                if (!ratexpr_equal(limit_a_infinity(small_weight(k)), q))
                    return expect(false, "limit of w(k) fails at k=" + std::to_string(k));
                if (!ratexpr_equal(limit_a_infinity(big_weight(k)),
                                   RatExpr::from_monomial(1, q_pow(k))))
                    return expect(false, "limit of W(k) fails at k=" + std::to_string(k));
            }
            LaurentPoly one_minus_Z(1), one_minus_q(1);
            one_minus_Z.add_term(Monomial{0, 0, 1}, -1);
            one_minus_q.add_term(q_pow(1), -1);
            return expect(
                ratexpr_equal(limit_a_infinity(aq_number({1, 0})), RatExpr(one_minus_Z, one_minus_q)),
                "limit of [z] is not [z]_q");
        });
        for (const auto& board : enumerate_ferrers(bounds.limit_cols, bounds.limit_height))
            tasks.push_back([board] {
                for (int k = 0; k <= board.columns(); ++k)
                    if (!q_rook_limit_check(board, k))
                        return expect(false, "q-limit fails: board=" + board.spec_string() +
                                                 " k=" + std::to_string(k));
                return std::optional<std::string>{};
            });
        out.push_back(run_criterion(8, "weight algebra and limits", tasks, workers));
    }

    {  // 9. classical counts
        std::vector<Task> tasks;
        for (int n = 1; n <= bounds.counts_n; ++n)
            tasks.push_back([n] {
                auto square = rectangle(n, n);
                if (static_cast<long>(nonattacking(square, n).size()) != factorial(n))
                    return expect(false, "n! count fails at n=" + std::to_string(n));
                if (static_cast<long>(matchings(matching_full(n), n).size()) !=
                    double_factorial_odd(n))
                    return expect(false, "(2n-1)!! count fails at n=" + std::to_string(n));
                return std::optional<std::string>{};
            });
        for (const auto& board : enumerate_ferrers(bounds.counts_n, bounds.counts_n))
            tasks.push_back([board] {
                for (int k = 0; k <= board.columns(); ++k)
                    if (static_cast<long>(file_placements(board, k).size()) !=
                        elementary_symmetric(board.heights(), k))
                        return expect(false, "file count fails: board=" + board.spec_string() +
                                                 " k=" + std::to_string(k));
                return std::optional<std::string>{};
            });
        out.push_back(run_criterion(9, "classical counts", tasks, workers));
    }

    {  // 10. serialization half of the CLI contract (process-level exit codes
        //     are exercised by the acceptance harness driving the binary)
        std::vector<Task> tasks;
        tasks.push_back([] {
            std::vector<RatExpr> values = {rook_standard(rectangle(1, 1), 0),
                                           rook_standard(rectangle(2, 2), 1),
                                           rook_matching(matching_full(2), 1),
                                           rook_alpha(staircase(3), 1, 2),
                                           closed_rect(3, 2, 2)};
            for (const auto& v : values) {
                std::string text = v.to_string();
                RatExpr back = RatExpr::parse(text);
                if (!ratexpr_equal(back, v) || back.to_string() != text)
                    return expect(false, "canonical text round-trip fails for " + text);
            }
            return std::optional<std::string>{};
        });
        tasks.push_back([] {
            VerificationReport report = verify_qpfaff(2, 1);
            VerificationReport back = report_from_json(report_to_json(report));
            bool same = back.identity == report.identity && back.holds == report.holds &&
                        back.params.size() == report.params.size();
            std::string again = report_to_json(back);
            return expect(same && report_from_json(again).holds == report.holds,
                          "JSON report round-trip fails");
        });
        out.push_back(run_criterion(10, "serialization round-trips", tasks, workers));
    }

    return out;
}

}  // namespace aqrook
