#pragma once

#include "qp/shell/ast.hpp"

namespace qp::shell {

/// Recursive-descent parser for the expression grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := "-" factor | base ("^" signed_int)?
///   base   := "x" | "p" | "y" | "q" | rational | "(" expr ")"
///           | "[" expr "," expr "]" | ident "(" expr ("," expr)* ")" | ident
///   rational := int | "(" int "/" int ")"
/// Explicit "*" is required between factors; juxtaposition is a ParseError.
/// Throws Error(ParseError) with line/column and the expected-token set.
AstPtr parse(const std::string& src);

} // namespace qp::shell
