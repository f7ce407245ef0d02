#pragma once

#include <string>
#include <vector>

namespace aqrook {

/// Grid bounds of the verification sweep. Defaults are the full sweep the
/// project is signed off against.
struct SuiteBounds {
    int rect_max = 4;          // rectangle closed form: l, m <= rect_max
    int ferrers_cols = 4;      // standard product / column recursion grid
    int ferrers_height = 4;
    int append_max = 5;        // appended column heights for the recursion
    int lah_n = 4;             // closed Lah + Lah product: 1 <= r <= n <= lah_n
    int lah_recur_n = 3;
    int alpha_cols = 3;        // alpha product grid, alpha in {0,1,2,3}
    int alpha_height = 3;
    int stair2_n = 4;          // alpha = 2 staircase closed form
    int match_closed_n = 3;    // matching closed form on full boards
    int match_recur_max = 6;   // matching recursion for even N up to this
    int match_boards_n = 3;    // exhaustive shifted boards for the product
    bool match_big_board = true;  // the 18-cell board (7,5,4,2,0,0,0), n = 4
    int qpfaff_n = 6;
    int qpfaff_r = 3;
    int jain_n = 5;
    int whipple_n = 5;
    int msaal_n = 5;
    int reversal_n = 5;
    int binom_n = 8;           // binomial recursions + symmetry
    int wmult_range = 4;       // |k|, |n| bound for W multiplicativity
    int split_y = 5;           // [y+z] splitting
    int limit_cols = 3;        // q-limit of rook numbers
    int limit_height = 3;
    int counts_n = 4;          // classical count checks

    /// Caps every n-like bound at max_n (>= 1) for quick reduced sweeps.
    void clamp_to(int max_n);
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    int checks = 0;  // individual comparisons performed
    double elapsed_ms = 0.0;
    std::vector<std::string> failures;  // one line per failing check
};

/// Runs the nine engine-level criteria plus the in-process half of the CLI
/// contract (serialization round-trips). Criteria are always emitted in
/// order regardless of worker count.
std::vector<CriterionResult> run_suite(const SuiteBounds& bounds, int workers = 1);

}  // namespace aqrook
