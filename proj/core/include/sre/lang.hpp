#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sre/expr.hpp"

namespace sre {

// A word over an alphabet, as symbol indexes.
using Word = std::vector<int>;

struct OracleLimits {
    int max_len = 12;                // hard cap on the length bound
    std::size_t max_words = 1'000'000; // word-set size guard
};

// All interleavings of x and y that keep the relative order of each.
// Every result has length |x| + |y|.
std::set<Word> shuffle_words(const Word& x, const Word& y);

// A language truncated to words of length <= limit.
struct BoundedLang {
    int limit = 0;
    std::set<Word> words;

    friend bool operator==(const BoundedLang&, const BoundedLang&) = default;
};

// L(e) restricted to words of length <= limit, computed by structural
// recursion with truncation at every node (star iterates to a fixpoint
// under the cap). This is the ground-truth oracle for the automaton and
// derivative modules; it is exact but exponential, hence the limits.
BoundedLang bounded_language(Expr e, int limit, const OracleLimits& limits = {});

// { x | a x in L }, with the limit reduced by one.
BoundedLang left_quotient(const BoundedLang& lang, int symbol);

// Membership by brute force: w in bounded_language(e, |w|).
bool member_bruteforce(Expr e, const Word& w, const OracleLimits& limits = {});

// Words serialize as concatenated symbol tokens, e.g. "ab" or "a1a2a3";
// the empty string is the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);

} // namespace sre
