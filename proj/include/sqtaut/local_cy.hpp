#pragma once

#include <vector>

#include "sqtaut/graded_poly.hpp"

namespace sqtaut {

/// Genus expansion F(t) = ((t/2)/sin(t/2))^2 = constant + sum_{g>=1} N_{g,1} t^{2g}
/// of the conifold local invariants.
struct LocalSeries {
  int max_genus = 0;
  Rational constant_term;         // coefficient of t^0, kept apart from the genus sum
  std::vector<Rational> n_g1;     // n_g1[g-1] = N_{g,1}
};

/// Ring Q[t] with deg t = 1.
GeneratorsPtr series_ring();

/// sin(t/2)/(t/2) = sum (-1)^n (t/2)^{2n} / (2n+1)!, truncated at t^maxdeg.
GradedPoly sinc_half_series(int maxdeg);

/// (2 sin(t/2))^2 truncated at t^maxdeg.
GradedPoly four_sin_half_squared(int maxdeg);

/// Expands F(t) to order t^{2G} by inverting (sinc(t/2))^2.
LocalSeries conifold_F(int max_genus);

/// Same coefficients via the second route: square the inverted sinc.
LocalSeries conifold_F_by_squaring(int max_genus);

/// Series F(t) as a polynomial in t (including the constant term).
GradedPoly as_series(const LocalSeries& s);

/// N_{g,d} = d^{2g-3} N_{g,1}.
Rational conifold_N(int genus, int d, const LocalSeries& series);

}  // namespace sqtaut
