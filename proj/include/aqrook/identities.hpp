#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqrook/rookmodels.hpp"

namespace aqrook {

/// Outcome of one identity verification. On failure the witness carries the
/// canonical forms of the two sides that differ.
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    bool holds = false;
    std::optional<std::pair<std::string, std::string>> witness;
    double elapsed_ms = 0.0;
};

/// Standard-model product formula, symbolic in Z: the column product of
/// weighted numbers equals the rook-number expansion.
VerificationReport verify_product_standard(const FerrersBoard& board);

/// Product formula specialization to the Lah board after the a-shift,
/// with the sum starting at k = r. Requires 1 <= r <= n.
VerificationReport verify_lah_product(int n, int r);

/// Terminating 3phi2 evaluation with generic a and q^z (r is a positive
/// integer; r < 1 with n >= 1 makes the written form singular and throws
/// DegenerateParameters).
VerificationReport verify_qpfaff(int n, int r);

/// Same summation in its standard A, B, C form, checked against the
/// verify_qpfaff instance term by term.
VerificationReport verify_pfaff_standard_form(int n, int r);

/// Terminating 4phi3 evaluation (Jain type), half powers of a via b.
VerificationReport verify_jain(int n);

/// Terminating 4phi3 evaluation (Whipple type), half powers via s and b.
VerificationReport verify_whipple_special(int n);

/// The Jain and Whipple sums are reverses of each other: for every k the
/// cross products t1_k * R2 and t2_{n-k} * R1 agree, where R1, R2 are the
/// full sums.
VerificationReport verify_reversal(int n);

/// Alpha-model product formula for a nonnegative integer alpha.
VerificationReport verify_product_alpha(const FerrersBoard& board, int alpha);

/// Matching-model product formula on a shifted Ferrers board.
VerificationReport verify_product_matching(const ShiftedBoard& board);

/// Matching-model summation together with the intermediate base-q^2 form it
/// is derived from; both must hold.
VerificationReport verify_matching_saalschutz(int n);

/// Both binomial recursions, the boundary conditions, and the (k, n-k)
/// symmetry for all 0 <= k <= n+1 <= n_max.
VerificationReport verify_binomial_recursions(int n_max);

}  // namespace aqrook
