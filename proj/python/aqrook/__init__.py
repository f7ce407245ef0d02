"""Exact (a;q)-rook theory: weighted rook numbers and identity verification.

Everything is exact symbolic arithmetic over the rationals in the variables
s, b, Z with q = s**2, a = b**2 and Z = q**z. Expressions print and parse in
the same canonical text form the CLI uses.
"""

from ._aqrook import (  # noqa: F401
    FerrersBoard,
    RatExpr,
    ShiftedBoard,
    aq_binomial,
    aq_factorial,
    aq_number,
    big_weight,
    closed_lah,
    closed_matching,
    closed_rect,
    closed_staircase2,
    count_file,
    count_matchings,
    count_nonattacking,
    enumerate_ferrers,
    enumerate_shifted,
    ferrers,
    lah_board,
    lah_number,
    limit_a_infinity,
    matching_full,
    max_rooks,
    pochhammer,
    q_binomial,
    q_factorial,
    q_number,
    q_rook_limit_check,
    rectangle,
    recur_lah_check,
    recur_matching_check,
    recur_standard_check,
    rook_alpha,
    rook_matching,
    rook_standard,
    run_suite,
    shifted,
    small_weight,
    staircase,
    substitute_a,
    verify_binomial_recursions,
    verify_jain,
    verify_lah_product,
    verify_matching_saalschutz,
    verify_pfaff_standard_form,
    verify_product_alpha,
    verify_product_matching,
    verify_product_standard,
    verify_qpfaff,
    verify_reversal,
    verify_whipple_special,
)

__version__ = "0.1.0"
