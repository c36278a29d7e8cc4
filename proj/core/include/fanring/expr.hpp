#pragma once

// Text form of ring elements: integer constants, the generators x1..xd
// and r1..rn, the operators + - * ^ and parentheses.  No implicit
// multiplication.  Exponents are nonnegative except directly on an r
// generator in multiplicative mode, where negative powers give Laurent
// terms.

#include <string>

#include "fanring/algebra.hpp"

namespace fanring {

// Throws parse_error with the byte offset of the trouble spot; out of
// range generators report "unknown generator".
XPolynomial parse_poly_expr(const std::string& text, Mode mode, int d, int n);

}  // namespace fanring
