#include "aqrook/weights.hpp"

#include "aqrook/factored.hpp"

namespace aqrook {

RatExpr pochhammer(const RatExpr& u, const Monomial& step, int n) {
    RatExpr out(1);
    for (int i = 0; i < n; ++i) {
        RatExpr shifted = u;
        shifted *= RatExpr::from_monomial(1, step.pow(i));
        out *= RatExpr(1) - shifted;
    }
    return out;
}

RatExpr small_weight(int k, int a_shift) { return f_small_weight(k, a_shift).to_ratexpr(); }

RatExpr big_weight(int k, int a_shift) { return f_big_weight(k, a_shift).to_ratexpr(); }

RatExpr aq_number(LinearArg arg, int a_shift) { return f_aq_number(arg, a_shift).to_ratexpr(); }

RatExpr aq_factorial(int n) { return f_aq_factorial(n).to_ratexpr(); }

RatExpr aq_binomial(int n, int k) { return f_aq_binomial(n, k).to_ratexpr(); }

RatExpr q_number(int z) { return f_q_number(z).to_ratexpr(); }

RatExpr q_factorial(int n) { return f_q_factorial(n).to_ratexpr(); }

RatExpr q_binomial(int n, int k) { return f_q_binomial(n, k).to_ratexpr(); }

}  // namespace aqrook
