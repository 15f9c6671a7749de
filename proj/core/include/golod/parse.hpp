#pragma once

// Text grammar for polynomials:
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer ['/' integer] | identifier | '(' expr ')'
//
// Juxtaposition is not a product. Whitespace is ignored.

#include <string_view>
#include <vector>

#include "golod/ring.hpp"

namespace golod {

/// Throws ParseError with the column of the offending character.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Comma-separated polynomial list (top-level commas only).
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

}  // namespace golod
