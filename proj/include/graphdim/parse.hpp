#pragma once

#include "graphdim/expr.hpp"

#include <string_view>

namespace graphdim {

/// Parse the expression mini-language into a FunctionExpr tree.
///
/// Grammar: infix + - * / and ^<positive integer>, parentheses, numeric
/// literals, the variable x, and the atoms
///   weier(a,b[,N])     Weierstrass series (N defaults from grid_m)
///   takagi([N])        Takagi series
///   peano_x([digits])  Peano curve first coordinate
///   cantor_ext(expr,r[,depth])  Cantor-set linear extension of expr, ratio r
///   fixture(beta)      shifted Weierstrass-type function of dimension beta
///
/// grid_m sets the default truncation depths so the unresolved series tail
/// stays below the finest counting scale. Throws ParseError with a byte
/// position on bad input.
ExprPtr parse_expression(std::string_view text, int grid_m);

} // namespace graphdim
