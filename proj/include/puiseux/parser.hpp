#pragma once

#include <string>
#include <string_view>

#include "puiseux/diffpoly.hpp"
#include "puiseux/solver.hpp"

namespace puiseux {

/// Parses a differential polynomial over Q. Terms are products of rational constants,
/// powers of x (x^(p/q) allowed) and y0..y9; y, y', y'', ... stand for y0, y1, y2, ...
/// Operators + - * / ^ and parentheses; division only by nonzero constants.
/// Throws ParseError with a 1-based line and column.
DiffPoly parse_diffpoly(std::string_view text);

/// A polynomial in one variable over Q, in any single-letter variable name.
QPoly parse_qpoly(std::string_view text);

/// "3/2", "-1", "2^(-3)" or "root(Z^2 - 3)": the latter means the root of the first
/// irreducible factor over the field of the branch.
ParamValue parse_param_value(std::string_view text);

/// Inverse of parse_diffpoly for polynomials over Q.
std::string serialize(const DiffPoly& f);

}  // namespace puiseux
