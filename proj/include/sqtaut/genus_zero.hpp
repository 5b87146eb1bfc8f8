#pragma once

#include <vector>

#include "sqtaut/rational.hpp"

namespace sqtaut {

/// Ordered sequence of positive parts.
using Composition = std::vector<int>;

/// All compositions of n, in lexicographic order.
std::vector<Composition> compositions(int n);

/// Polynomial in t with integer coefficients; entry i is the coefficient of t^i.
using IntPoly = std::vector<mpz_class>;

/// Virtual Poincaré polynomial of the stable-quotient space Q_{0,2}(G(1,1), d),
/// summed over its strata S_{(d_1..d_n)} = prod Sym^{d_i}(C^*)/C^*, each of
/// which contributes prod t^{2 d_i - 2}.
IntPoly poincare_Q02(int d);

/// (1 + t^2)^(d-1).
IntPoly poincare_closed_form(int d);

/// ∫ over M_{0,2|d} of psi_1^x1 psi_2^x2 prod psi-hat_j^y_j, via the recursion
/// that forgets a light point carrying exponent 0. Zero off dimension d-1.
Rational intersect_M02d(int d, int x1, int x2, const std::vector<int>& y);

/// ∫ over M_{0,n} of prod psi_i^a_i = (n-3)! / prod a_i! when sum a_i = n-3.
Rational psi_integral_M0n(const std::vector<int>& exponents);

}  // namespace sqtaut
