#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sre/derive.hpp"
#include "sre/expr.hpp"
#include "sre/lang.hpp"

namespace sre {

// An eps-free NFA with expression-labeled states. State labels are Expr
// handles, so an Nfa must not outlive the pool it was built from.
struct Nfa {
    Alphabet alphabet;
    std::vector<Expr> states;                // index = state id
    std::vector<std::uint32_t> initial;      // sorted
    std::vector<std::uint32_t> finals;       // sorted
    // transitions[s][a] = sorted target states
    std::vector<std::vector<std::vector<std::uint32_t>>> transitions;

    std::size_t state_count() const noexcept { return states.size(); }
    bool is_final(std::uint32_t s) const;
};

// The partial derivative automaton of e: states are e and all its proper
// derivatives, the single initial state is e, transitions are partial
// derivatives by one symbol, finals are the nullable states. State 0 is
// always the initial state; the rest follow breadth-first discovery order.
Nfa build_apd(ExprPool& pool, Expr e, const DeriveLimits& limits = {});

// Subset propagation over w starting from the initial set.
bool nfa_member(const Nfa& nfa, const Word& w);

// True iff the words of length <= limit accepted from {state} equal
// bounded_language(label(state), limit). Exercises the right-language
// property of the construction.
bool right_language_check(const Nfa& nfa, std::uint32_t state, int limit,
                          const OracleLimits& limits = {});

struct EquivResult {
    bool equivalent = false;
    Word witness; // a shortest distinguishing word when not equivalent

    explicit operator bool() const noexcept { return equivalent; }
};

// Product breadth-first walk of the two partial derivative automata,
// comparing acceptance on every word of length <= limit. Exact
// inequivalence is intractable in general; the bound is the contract.
EquivResult bounded_equiv(ExprPool& pool, Expr e1, Expr e2, int limit,
                          const DeriveLimits& limits = {});

// Deterministic serializations: states in index order, transitions sorted
// by (from, symbol, to).
//
// JSON schema:
//   {"alphabet":[...], "states":[expr-string,...], "initial":[int],
//    "final":[int,...], "transitions":[[from,"symbol",to],...]}
std::string export_json(const Nfa& nfa);
std::string export_dot(const Nfa& nfa);

// Rebuilds an Nfa from export_json output, re-parsing state labels into
// the given pool. import_json(pool, export_json(n)) reproduces n up to
// pool identity of the labels.
Nfa import_json(ExprPool& pool, std::string_view json_text);

} // namespace sre
