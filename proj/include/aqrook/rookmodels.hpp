#pragma once

#include "aqrook/factored.hpp"
#include "aqrook/placements.hpp"

namespace aqrook {

// Weighted rook numbers for the three models, by direct enumeration, plus
// the closed forms they factor into on the named board families. The _f
// variants expose the factored-denominator form the identity checks build
// their sums from; the RatExpr versions expand them.

/// Standard model: sum over nonattacking placements of the product of small
/// weights w(col - row - nw) over uncancelled cells.
FExpr rook_standard_f(const FerrersBoard& board, int k);
RatExpr rook_standard(const FerrersBoard& board, int k);

/// Closed form on the rectangle [l] x [m]; zero outside 0 <= k <= min(l, m).
FactorProduct closed_rect_f(int l, int m, int k);
RatExpr closed_rect(int l, int m, int k);

/// Column recursion: appending a column of height m >= max height to B
/// splits each rook number into a big-weight and a number term. Verified by
/// enumeration for all 1 <= k <= columns + 1. Throws NotFerrersAfterAppend.
bool recur_standard_check(const FerrersBoard& board, int m);

/// Restricted Lah number: rook number of the Lah board with a shifted by
/// q^{2(1-r)}. Zero for k < r-1 or k > n; the degenerate base
/// lah_number(r-1, r, r-1) = 1.
FExpr lah_number_f(int n, int r, int k);
RatExpr lah_number(int n, int r, int k);

/// Closed form of the restricted Lah number; zero outside r <= k <= n.
FactorProduct closed_lah_f(int n, int r, int k);
RatExpr closed_lah(int n, int r, int k);

/// Lah recursion in n, checked for all k in range; requires 1 <= r <= n.
bool recur_lah_check(int n, int r);

/// Alpha-parameter model over file placements; every board cell carries a
/// weight driven by (v, nw, rook-above) statistics. alpha = 0 degenerates to
/// the standard model.
FExpr rook_alpha_f(const FerrersBoard& board, int k, int alpha);
RatExpr rook_alpha(const FerrersBoard& board, int k, int alpha);

/// Classical alpha-model row weight of a file placement: each row with u >= 2
/// rooks contributes alpha(2 alpha - 1)...((u-1) alpha - (u-2)). Integer
/// cross-check of the unweighted counting layer.
long classical_alpha_weight(const Placement& p, int alpha);

/// Closed form of the alpha = 2 rook number on the staircase St_n;
/// zero outside 0 <= k <= n-1.
FactorProduct closed_staircase2_f(int n, int k);
RatExpr closed_staircase2(int n, int k);

/// Matching model on shifted boards: sum over partial matchings of small
/// weights w(hat i + hat j - 1 - 2r - s) over uncancelled cells, hat x = 2n - x.
FExpr rook_matching_f(const ShiftedBoard& board, int k);
RatExpr rook_matching(const ShiftedBoard& board, int k);

/// Closed form on the full board B_{2n}; zero outside 0 <= k <= n.
FactorProduct closed_matching_f(int n, int k);
RatExpr closed_matching(int n, int k);

/// Vertex-deletion recursion m_k(B_N) in terms of the full board on N-1
/// vertices (embedded in the same 2n = N frame); N must be even and >= 2.
bool recur_matching_check(int N);

/// The a -> infinity limit of the standard rook number equals the direct
/// q-count that weights every uncancelled cell by q.
bool q_rook_limit_check(const FerrersBoard& board, int k);

/// Largest k for which the model admits a placement on the board.
int max_rooks(const FerrersBoard& board, Model model);
int max_rooks(const ShiftedBoard& board);

enum class RookModel { standard, alpha, matching };

/// One computed rook number with its provenance. The value is always a
/// ratio of Laurent polynomials with even b-exponents.
struct RookNumber {
    AnyBoard board;
    RookModel model = RookModel::standard;
    int alpha = 0;  // alpha model only
    int k = 0;
    RatExpr value;
};

/// Dispatches to the right model; the board variant must match the model
/// (Ferrers for standard/alpha, shifted for matching).
RookNumber compute_rook_number(const AnyBoard& board, RookModel model, int k, int alpha = 0);

}  // namespace aqrook
