#pragma once

#include <span>
#include <string>

#include "reskit/polynomial.hpp"

namespace reskit {

/// Parses the polynomial grammar
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := [coef '*'] factor ('*' factor)* | coef
///   factor := (var | param) ['^' posint]
///   coef   := integer | integer '/' posint
/// with variables x1..xn and parameters drawn from `params`. Whitespace is
/// insignificant. The result is canonicalized and checked for homogeneity;
/// a bare-coefficient term covers literals like "0".
/// Throws ParseError with a 1-based character position on any violation.
Polynomial parse_polynomial(const std::string& text, int n, std::span<const std::string> params);

} // namespace reskit
