#pragma once

#include "hautus/poly.hpp"

#include <string>
#include <string_view>

namespace hautus {

// Canonical rendering: terms in descending degrevlex, e.g. "d1^2*d2 - 3/2*d3".
// Round-trips through parse_poly exactly.
std::string poly_to_string(const Poly& p);

// Grammar: variables d1..dn, integer or rational literals (3/2), operators
// + - * ^ and parentheses. No implicit multiplication. Unary +/- allowed at
// the start of an expression or subexpression. Throws parse_error with a
// 1-based position; line_offset shifts reported line numbers so the matrix
// reader can point into its own file.
Poly parse_poly(std::string_view text, int nvars, int line_offset = 0, int column_offset = 0);

} // namespace hautus
