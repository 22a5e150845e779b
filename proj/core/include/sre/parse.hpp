#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sre/expr.hpp"

namespace sre {

// Concrete syntax
// ---------------
//   SYMBOL   [a-z][0-9]*
//   EPS      @
//   EMPTY    $      (whole expression only)
//   SHUFFLE  #
//   UNION    +
//   CONCAT   .      (optional; juxtaposition also concatenates)
//   STAR     *      (postfix)
//   grouping ( )
//
// Precedence, tightest first: * , concatenation, #, +.
// Binary operators associate to the left.

// Parses `text` over the pool's alphabet. Throws ParseError on lexical or
// syntax errors, on symbols missing from the alphabet, and on `$`
// occurring inside a larger expression.
Expr parse(ExprPool& pool, std::string_view text);

// Inverse of parse up to redundant parentheses: parse(pretty_print(e)) == e.
// Emits minimal parentheses under the precedence above; concatenation is
// printed with an explicit dot.
std::string pretty_print(Expr e);

// Prefix form for diagnostics, e.g. union(concat(a, star(b)), eps).
std::string tree_string(Expr e);

// All SYMBOL tokens occurring in `text`, deduplicated, sorted by name.
// Used to infer a default alphabet; tolerates text that does not parse.
std::vector<std::string> scan_symbol_names(std::string_view text);

} // namespace sre
