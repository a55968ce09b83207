#pragma once

#include <string_view>
#include <vector>

#include "ktypes/poly/multipoly.hpp"

namespace ktypes::poly {

/// Polynomials over x, y, z, w with rational coefficients:
/// `3/2*x^2*y - 1`, `(x+1)^3`, `-x/2`. Division is allowed by nonzero
/// constants only. Throws ParseError.
MultiPoly parse_poly(std::string_view text);

/// `[f1, f2, ...]`; `[]` is the zero ideal.
std::vector<MultiPoly> parse_ideal(std::string_view text);

struct Univariate {
  UniPoly poly;
  /// Index of the variable (0 when the polynomial is constant).
  int var = 0;
};

/// A polynomial in at most one variable. Throws ParseError.
Univariate parse_univariate(std::string_view text);

}  // namespace ktypes::poly
