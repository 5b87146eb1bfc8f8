#include "sqtaut/local_cy.hpp"

#include "sqtaut/errors.hpp"

namespace sqtaut {

GeneratorsPtr series_ring() {
  static const GeneratorsPtr ring = GeneratorSet::variables({"t"}, {1});
  return ring;
}

GradedPoly sinc_half_series(int maxdeg) {
  GradedPoly s(series_ring(), maxdeg);
  for (int n = 0; 2 * n <= maxdeg; ++n) {
    Rational c = Rational(1, factorial(2 * n + 1) * (mpz_class(1) << static_cast<unsigned>(2 * n)));
    if (n % 2) c = -c;
    s.add_term({static_cast<std::uint32_t>(2 * n)}, c);
  }
  return s;
}

GradedPoly four_sin_half_squared(int maxdeg) {
  // (2 sin(t/2))^2 = t^2 sinc(t/2)^2
  GradedPoly t2(series_ring(), maxdeg);
  t2.add_term({2}, 1);
  GradedPoly sinc = sinc_half_series(maxdeg);
  return poly_mul(t2, poly_mul(sinc, sinc, maxdeg), maxdeg);
}

namespace {

LocalSeries from_poly(const GradedPoly& f, int max_genus) {
  LocalSeries s;
  s.max_genus = max_genus;
  s.constant_term = f.coefficient({});
  for (int g = 1; g <= max_genus; ++g) s.n_g1.push_back(f.coefficient({static_cast<std::uint32_t>(2 * g)}));
  return s;
}

void require_genus(int max_genus) {
  if (max_genus < 1) throw InputError("conifold: max genus must be >= 1");
}

}  // namespace

LocalSeries conifold_F(int max_genus) {
  require_genus(max_genus);
  const int order = 2 * max_genus;
  GradedPoly sinc = sinc_half_series(order);
  return from_poly(truncated_inverse(poly_mul(sinc, sinc, order), order), max_genus);
}

LocalSeries conifold_F_by_squaring(int max_genus) {
  require_genus(max_genus);
  const int order = 2 * max_genus;
  GradedPoly inv = truncated_inverse(sinc_half_series(order), order);
  return from_poly(poly_mul(inv, inv, order), max_genus);
}

GradedPoly as_series(const LocalSeries& s) {
  GradedPoly f(series_ring(), 2 * s.max_genus);
  f.add_term({}, s.constant_term);
  for (int g = 1; g <= s.max_genus; ++g)
    f.add_term({static_cast<std::uint32_t>(2 * g)}, s.n_g1[static_cast<std::size_t>(g - 1)]);
  return f;
}

Rational conifold_N(int genus, int d, const LocalSeries& series) {
  if (genus < 1 || genus > series.max_genus)
    throw InputError("conifold_N: genus " + std::to_string(genus) + " outside 1.." +
                     std::to_string(series.max_genus));
  if (d < 1) throw InputError("conifold_N: d must be >= 1");
  return pow(Rational(d), 2 * genus - 3) * series.n_g1[static_cast<std::size_t>(genus - 1)];
}

}  // namespace sqtaut
