#pragma once

#include <string_view>

#include "sqtaut/pointed_class.hpp"

namespace sqtaut {

// Text syntax shared by the pretty printer and the CLI:
//
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := integer ['/' integer] | atom ['^' integer] | '(' expr ')' ['^' integer]
//   atom   := kappa_a | lambda_i | psi_j | psi_{j,...} | D_{i,j,...} | Delta | Delta_i
//
// psi_{J} denotes the cotangent class at min(J); it equals the class at any
// point of J once multiplied by D_J.

/// Parses a kappa/lambda polynomial. kappa_0 reads as 2g-2.
KLPoly parse_kl(int genus, std::string_view text);

/// Parses a class on M_{g,0|d}.
PointedClass parse_pointed(int genus, int d, std::string_view text);

}  // namespace sqtaut
