#pragma once

#include "aqrook/ratexpr.hpp"

namespace aqrook {

/**
 * Argument "z_coeff * z + offset" of a weighted number. Since z stays
 * symbolic, q^{arg} is the monomial Z^{z_coeff} s^{2 * offset}.
 */
struct LinearArg {
    int z_coeff = 0;  // 0 or 1
    int offset = 0;
};

/// (u; step)_n = prod_{i=0}^{n-1} (1 - u * step^i), with (u; step)_0 = 1.
RatExpr pochhammer(const RatExpr& u, const Monomial& step, int n);

/// Small weight w_{a q^{a_shift}; q}(k) = q^{-1} (1 - a q^{a_shift + 2k + 1}) / (1 - a q^{a_shift + 2k - 1}).
RatExpr small_weight(int k, int a_shift = 0);

/// Big weight W_{a q^{a_shift}; q}(k) = q^{-k} (1 - a q^{a_shift + 2k + 1}) / (1 - a q^{a_shift + 1}).
/// For k >= 1 this equals the product of small weights w(1) ... w(k).
RatExpr big_weight(int k, int a_shift = 0);

/// Weighted number [arg]_{a q^{a_shift}; q}
///   = (1 - q^{arg}) (1 - a q^{a_shift} q^{arg}) q^{1-arg} / ((1 - q)(1 - a q^{a_shift + 1})).
RatExpr aq_number(LinearArg arg, int a_shift = 0);

/// [0]! = 1, [n]! = [n] * [n-1]!.
RatExpr aq_factorial(int n);

/// Two-parameter binomial coefficient; zero outside 0 <= k <= n. Built from
/// the Pochhammer product form; agrees with the factorial quotient.
RatExpr aq_binomial(int n, int k);

/// Classical q-number [z]_q = (1 - q^z)/(1 - q).
RatExpr q_number(int z);

/// [n]_q! = [1]_q ... [n]_q.
RatExpr q_factorial(int n);

/// Gaussian binomial coefficient; zero outside 0 <= k <= n.
RatExpr q_binomial(int n, int k);

}  // namespace aqrook
