// Surface expression language for algebra elements:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := 't' | 's<i>' | 'J<k>' | 'T<k>' | 'L<k>' | scalar | '(' expr ')'
// where scalar is an integer, a rational p/q, or one of u<i>, z, y<k>.
// 'T<k>' and 'L<k>' denote t_k and L_k = sum_{j<k} (j,k).

#pragma once

#include "hecke/element.hpp"

#include <string>

namespace hecke {

// Parses and normalizes in one pass. Throws ParseError with a character
// position on malformed input.
Element parse_expr(int m, int n, const std::string& text);

}  // namespace hecke
