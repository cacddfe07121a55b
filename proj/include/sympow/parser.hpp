#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow {

/// Parses
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := variable | integer | '(' expr ')'
/// Whitespace is insignificant. Throws ParseError with a byte offset.
Polynomial parse_poly(std::string_view text, const Ring& ring);

/// Comma-separated polynomial list; empty text gives an empty list.
std::vector<Polynomial> parse_poly_list(std::string_view text, const Ring& ring);

/// Text that parse_poly accepts and maps back to a nonzero scalar multiple
/// of `f` (exactly `f` whenever its coefficients are integers or residues).
std::string to_input_string(const Polynomial& f);

}  // namespace sympow
