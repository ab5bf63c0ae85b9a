#pragma once

#include "whmilnor/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace whm {

// Expression grammar (whitespace is ignored between tokens):
//
//   expr    := term (("+" | "-") term)*
//   term    := unary (("*" | "/") unary)*        "/" only by a nonzero constant
//   unary   := ("+" | "-") unary | power
//   power   := primary ("^" integer)?
//   primary := integer | identifier | "(" expr ")"
//
// Identifiers are a letter followed by letters or digits. Multiplication is
// always explicit.

/// Throws ParseError for syntax errors, unknown identifiers and negative exponents.
Polynomial parse_polynomial(std::string_view text, const VariableList& variables);

/// Every identifier in `text`, sorted and deduplicated. Throws ParseError on
/// characters outside the grammar.
std::vector<std::string> collect_identifiers(std::string_view text);

/// Splits "(a, b, c)" into {"a", "b", "c"} at top-level commas. The outer
/// parentheses are required; "()" is the empty list.
std::vector<std::string> split_expression_list(std::string_view text);

} // namespace whm
