#include "aqrook/rookmodels.hpp"

#include <algorithm>

namespace aqrook {

namespace {

inline long choose2(long x) { return x * (x - 1) / 2; }

FactorProduct standard_weight_product(const FerrersBoard& board, const Placement& p) {
    FactorProduct w;
    for (const Cell& c : uncancelled_standard(board, p)) {
        w *= f_small_weight(c.col - c.row - nw_rooks(p, c), 0);
        if (w.is_zero()) break;
    }
    return w;
}

}  // namespace

FExpr rook_standard_f(const FerrersBoard& board, int k) {
    std::vector<FactorProduct> terms;
    for (const Placement& p : nonattacking(board, k))
        terms.push_back(standard_weight_product(board, p));
    return sum_factor_products(terms);
}

RatExpr rook_standard(const FerrersBoard& board, int k) {
    return rook_standard_f(board, k).to_ratexpr();
}

FactorProduct closed_rect_f(int l, int m, int k) {
    if (k < 0 || k > std::min(l, m)) return FactorProduct::zero();
    FactorProduct out;
    out.mul_mono(q_pow(static_cast<int>(choose2(k + 1) - static_cast<long>(l) * m)));
    out *= f_q_binomial(l, k);
    // [m]! / [m-k]! = (q^{m-k+1}; q)_k / (1-q)^k
    out.mul_poch(1, q_pow(m - k + 1), q_pow(1), k, +1);
    out.mul_factor(1, q_pow(1), -k);
    out.mul_poch(1, aq_pow(l - m - k), q_pow(1), k, +1);
    out.mul_poch(1, aq_pow(1 + 2 * l - 2 * m), q_pow(2), m - k, +1);
    out.mul_poch(1, aq_pow(1 - 2 * m), q_pow(2), m, -1);
    return out;
}

RatExpr closed_rect(int l, int m, int k) { return closed_rect_f(l, m, k).to_ratexpr(); }

bool recur_standard_check(const FerrersBoard& board, int m) {
    if (m < board.max_height()) throw NotFerrersAfterAppend();
    const int l = board.columns();
    FerrersBoard bigger = board.append_column(m);
    std::vector<FExpr> r_small(static_cast<std::size_t>(l) + 2);
    std::vector<FExpr> r_big(static_cast<std::size_t>(l) + 2);
    for (int k = 0; k <= l + 1; ++k) {
        r_small[static_cast<std::size_t>(k)] = rook_standard_f(board, k);
        r_big[static_cast<std::size_t>(k)] = rook_standard_f(bigger, k);
    }
    const int shift = 2 * (l - m);
    for (int k = 1; k <= l + 1; ++k) {
        FExpr rhs = r_small[static_cast<std::size_t>(k)] * f_big_weight(m - k, shift);
        rhs += r_small[static_cast<std::size_t>(k - 1)] * f_aq_number({0, m - k + 1}, shift);
        if (!fexpr_equal(r_big[static_cast<std::size_t>(k)], rhs)) return false;
    }
    return true;
}

FExpr lah_number_f(int n, int r, int k) {
    if (r < 1) throw InvalidFamilyParams("lah numbers need r >= 1");
    if (n == r - 1) return FExpr(k == r - 1 ? 1 : 0);  // degenerate base
    if (n < r) throw InvalidFamilyParams("lah numbers need n >= r-1");
    if (k < r - 1 || k > n) return FExpr();
    return rook_standard_f(lah_board(n, r), n - k).substituted_a(2 * (1 - r));
}

RatExpr lah_number(int n, int r, int k) { return lah_number_f(n, r, k).to_ratexpr(); }

FactorProduct closed_lah_f(int n, int r, int k) {
    if (r < 1 || r > n || k < r || k > n) return FactorProduct::zero();
    FactorProduct out;
    out.mul_mono(q_pow(static_cast<int>(choose2(k) - choose2(n) - static_cast<long>(n) * (k - 1) +
                                        2 * choose2(r))));
    out *= f_q_binomial(n + r - 1, k + r - 1);
    out.mul_poch(1, q_pow(k - r + 1), q_pow(1), n - k, +1);  // [n-r]!/[k-r]!
    out.mul_factor(1, q_pow(1), -(n - k));
    out.mul_poch(1, aq_pow(1 - n + k), q_pow(1), n - k, +1);
    out.mul_poch(1, aq_pow(1 + 2 * r), q_pow(2), k - r, +1);
    out.mul_poch(1, aq_pow(3 - 2 * n), q_pow(2), n - r, -1);
    return out;
}

RatExpr closed_lah(int n, int r, int k) { return closed_lah_f(n, r, k).to_ratexpr(); }

bool recur_lah_check(int n, int r) {
    if (r < 1 || r > n) throw InvalidFamilyParams("lah recursion needs 1 <= r <= n");
    for (int k = r - 1; k <= n + 1; ++k) {
        FExpr lhs = lah_number_f(n + 1, r, k);
        FExpr rhs = lah_number_f(n, r, k - 1) * f_big_weight(n + k - 1, -2 * n);
        rhs += lah_number_f(n, r, k) * f_aq_number({0, n + k}, -2 * n);
        if (!fexpr_equal(lhs, rhs)) return false;
    }
    return true;
}

namespace {

FactorProduct alpha_weight_product(const FerrersBoard& board, const Placement& p, int alpha) {
    FactorProduct w;
    for (const Cell& c : board.cells()) {
        AlphaStats st = alpha_stats(p, c);
        if (st.below_rook) continue;  // weight 1
        const int count = (alpha - 1) * st.v + 1;
        const int shift = 2 * (-c.row + (alpha - 1) * (1 - c.col + st.r_nw));
        if (p.contains(c))
            w *= f_aq_number({0, count}, shift);
        else
            w *= f_big_weight(count, shift);
        if (w.is_zero()) break;
    }
    return w;
}

}  // namespace

FExpr rook_alpha_f(const FerrersBoard& board, int k, int alpha) {
    std::vector<FactorProduct> terms;
    for (const Placement& p : file_placements(board, k))
        terms.push_back(alpha_weight_product(board, p, alpha));
    return sum_factor_products(terms);
}

RatExpr rook_alpha(const FerrersBoard& board, int k, int alpha) {
    return rook_alpha_f(board, k, alpha).to_ratexpr();
}

long classical_alpha_weight(const Placement& p, int alpha) {
    std::map<int, int> per_row;
    for (const Cell& c : p.cells) ++per_row[c.row];
    long w = 1;
    for (const auto& [row, u] : per_row) {
        (void)row;
        for (int t = 1; t < u; ++t) w *= static_cast<long>(t) * alpha - (t - 1);
    }
    return w;
}

FactorProduct closed_staircase2_f(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) return FactorProduct::zero();
    FactorProduct out;
    out.mul_mono(q_pow(static_cast<int>(-choose2(n + k) + static_cast<long>(k) * (k + 2))));
    out *= f_q_binomial(n + k - 1, 2 * k);
    for (int j = 1; j <= k; ++j) out *= f_q_number(2 * j - 1);
    out.mul_poch(1, aq_pow(1), q_pow(-2), n - k, +1);
    out.mul_poch(1, aq_pow(1 - 2 * n), q_pow(2), k, +1);
    out.mul_poch(1, aq_pow(1), q_pow(-4), n, -1);
    return out;
}

RatExpr closed_staircase2(int n, int k) { return closed_staircase2_f(n, k).to_ratexpr(); }

namespace {

FactorProduct matching_weight_product(const std::vector<Cell>& cells, int vertices,
                                      const Placement& p) {
    FactorProduct w;
    for (const Cell& c : uncancelled_matching_in(cells, p)) {
        MatchingStats st = matching_stats(p, c);
        const int arg = (vertices - c.row) + (vertices - c.col) - 1 - 2 * st.r - st.s;
        w *= f_small_weight(arg, 0);
        if (w.is_zero()) break;
    }
    return w;
}

/// Matching rook number over an explicit cell set; the hat offsets are
/// taken relative to the given vertex count.
FExpr matching_rook_on(const std::vector<Cell>& cells, int vertices, int k) {
    std::vector<FactorProduct> terms;
    for (const Placement& p : matchings_in(cells, vertices, k))
        terms.push_back(matching_weight_product(cells, vertices, p));
    return sum_factor_products(terms);
}

}  // namespace

FExpr rook_matching_f(const ShiftedBoard& board, int k) {
    return matching_rook_on(board.cells(), board.vertices(), k);
}

RatExpr rook_matching(const ShiftedBoard& board, int k) {
    return rook_matching_f(board, k).to_ratexpr();
}

FactorProduct closed_matching_f(int n, int k) {
    if (n < 1 || k < 0 || k > n) return FactorProduct::zero();
    FactorProduct out;
    out.mul_mono(q_pow(static_cast<int>(static_cast<long>(k) * k - choose2(2 * n))));
    out *= f_q_binomial(2 * n, 2 * k);
    for (int j = 1; j <= k; ++j) out *= f_q_number(2 * j - 1);
    out.mul_poch(1, aq_pow(4 * n - 2 * k - 3), q_pow(2), 2 * n - k - 1, +1);
    out.mul_poch(1, aq_pow(-1), q_pow(4), 2 * n - k - 1, -1);
    return out;
}

RatExpr closed_matching(int n, int k) { return closed_matching_f(n, k).to_ratexpr(); }

namespace {

/// All cells of the full board on vertices 1..v, in (row, col) order.
std::vector<Cell> full_board_cells(int vertices) {
    std::vector<Cell> out;
    for (int i = 1; i < vertices; ++i)
        for (int j = i + 1; j <= vertices; ++j) out.push_back({j, i});
    return out;
}

}  // namespace

bool recur_matching_check(int N) {
    if (N < 2 || N % 2 != 0) throw InvalidFamilyParams("matching recursion needs even N >= 2");
    const int n = N / 2;
    ShiftedBoard full = matching_full(n);
    // Deleting the last vertex leaves the full board on N-1 vertices, with
    // the hat offsets taken relative to N-1.
    std::vector<Cell> smaller = full_board_cells(N - 1);
    const int shift = 2 * (N - 3);
    for (int k = 0; k <= n; ++k) {
        FExpr lhs = rook_matching_f(full, k);
        FExpr rhs = matching_rook_on(smaller, N - 1, k - 1) * f_aq_number({0, N - 2 * k + 1}, shift);
        rhs += matching_rook_on(smaller, N - 1, k) * f_big_weight(N - 2 * k - 1, shift);
        if (!fexpr_equal(lhs, rhs)) return false;
    }
    return true;
}

bool q_rook_limit_check(const FerrersBoard& board, int k) {
    RatExpr limit = limit_a_infinity(rook_standard(board, k));
    LaurentPoly direct;
    for (const Placement& p : nonattacking(board, k)) {
        int cells = static_cast<int>(uncancelled_standard(board, p).size());
        direct.add_term(q_pow(cells), 1);
    }
    return ratexpr_equal(limit, RatExpr(direct));
}

int max_rooks(const FerrersBoard& board, Model model) {
    int k = 0;
    while (true) {
        auto next = model == Model::nonattacking ? nonattacking(board, k + 1)
                                                 : file_placements(board, k + 1);
        if (next.empty()) return k;
        ++k;
    }
}

int max_rooks(const ShiftedBoard& board) {
    int k = 0;
    while (!matchings(board, k + 1).empty()) ++k;
    return k;
}

RookNumber compute_rook_number(const AnyBoard& board, RookModel model, int k, int alpha) {
    RookNumber out{board, model, alpha, k, RatExpr()};
    if (model == RookModel::matching) {
        if (!std::holds_alternative<ShiftedBoard>(board))
            throw InvalidFamilyParams("matching model needs a shifted board");
        out.value = rook_matching(std::get<ShiftedBoard>(board), k);
        return out;
    }
    if (!std::holds_alternative<FerrersBoard>(board))
        throw InvalidFamilyParams("this model needs a Ferrers board");
    const auto& fb = std::get<FerrersBoard>(board);
    out.value = model == RookModel::alpha ? rook_alpha(fb, k, alpha) : rook_standard(fb, k);
    return out;
}

}  // namespace aqrook
