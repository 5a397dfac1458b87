#pragma once

#include <cstddef>
#include <string_view>

#include "hodge/polynomial.hpp"

namespace hodge {

/// Parses the textual polynomial grammar: variables x0..xN, integer or a/b
/// coefficients, operators + - * ^ and parentheses, whitespace ignored.
///
/// The ring has `n_vars` variables when nonzero, otherwise one more than the
/// largest variable index seen. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, std::size_t n_vars = 0);

}  // namespace hodge
