#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sre/expr.hpp"
#include "sre/lang.hpp"
#include "sre/parse.hpp"

namespace test {

// Pretty-printed, sorted view of an expression set for readable asserts.
inline std::vector<std::string> strings_of(const sre::ExprSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (sre::Expr e : s) out.push_back(sre::pretty_print(e));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> words_of(const std::set<sre::Word>& words,
                                         const sre::Alphabet& alphabet) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(sre::format_word(alphabet, w));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace test
