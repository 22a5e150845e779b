#pragma once

#include <cstddef>

#include "sre/bigint.hpp"
#include "sre/expr.hpp"
#include "sre/lang.hpp"

namespace sre {

struct DeriveLimits {
    std::size_t max_states = 1'000'000; // closure state budget
    std::size_t max_set_items = 0;      // set-element work budget; 0 = unlimited
};

// The support of e: the finite expression set that satisfies a linear
// system of language equations for e. Computed by structural recursion
// through the shared set constructors, so unit collapsing is identical to
// the derivative side.
ExprSet pi(ExprPool& pool, Expr e, const DeriveLimits& limits = {});

// Partial derivative of e by one symbol: a set of expressions whose
// languages union to the left quotient of L(e) by that symbol.
ExprSet partial_derivative(ExprPool& pool, Expr e, int symbol);

// Fold of partial_derivative over the word; the derivative by the empty
// word is {e}.
ExprSet derivative_by_word(ExprPool& pool, Expr e, const Word& w);

// All derivatives of the origin: `all` by arbitrary words, `proper` by
// nonempty words only. all == proper + {origin}; proper is closed under
// derivation by every symbol.
struct DerivClosure {
    Expr origin;
    ExprSet all;
    ExprSet proper;
};

// Breadth-first saturation of {e} under derivation by every alphabet
// symbol. Throws BudgetError when max_states is exceeded; the worst case
// is exponential in the alphabetic width by design.
DerivClosure closure(ExprPool& pool, Expr e, const DeriveLimits& limits = {});

// Upper bound for |pi(e)|, exact when all unions in the support stay
// disjoint. Grows multiplicatively under shuffle, hence the big integer.
BigInt p_upper(Expr e);

// Verifies the defining equation system of a support at the language
// level, for every gamma in {e} + pi(e) and words up to `limit`:
//   L(gamma) == union over a of a . L(d_a(gamma))  [+ eps if nullable]
bool check_support(ExprPool& pool, Expr e, int limit, const OracleLimits& limits = {});

} // namespace sre
