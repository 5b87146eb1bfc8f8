#include "sqtaut/genus_zero.hpp"

#include <algorithm>
#include <numeric>

#include "sqtaut/errors.hpp"

namespace sqtaut {

std::vector<Composition> compositions(int n) {
  if (n < 1) throw InputError("compositions: n must be >= 1");
  std::vector<Composition> out;
  Composition current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      current.push_back(part);
      self(self, remaining - part);
      current.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

IntPoly poincare_Q02(int d) {
  if (d < 1) throw InputError("poincare_Q02: d must be >= 1, got " + std::to_string(d));
  IntPoly p(static_cast<std::size_t>(2 * d - 1), 0);
  for (const auto& comp : compositions(d)) {
    int exponent = 0;
    for (int part : comp) exponent += 2 * part - 2;
    p[static_cast<std::size_t>(exponent)] += 1;
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

IntPoly poincare_closed_form(int d) {
  if (d < 1) throw InputError("poincare_closed_form: d must be >= 1");
  IntPoly p(static_cast<std::size_t>(2 * d - 1), 0);
  for (int i = 0; i <= d - 1; ++i) p[static_cast<std::size_t>(2 * i)] = binomial(d - 1, i);
  return p;
}

Rational intersect_M02d(int d, int x1, int x2, const std::vector<int>& y) {
  if (d < 1) throw InputError("intersect_M02d: d must be >= 1");
  if (static_cast<int>(y.size()) != d)
    throw InputError("intersect_M02d: need one psi-hat exponent per light point");
  if (x1 < 0 || x2 < 0) return 0;
  if (std::any_of(y.begin(), y.end(), [](int v) { return v < 0; })) return 0;
  if (x1 + x2 + std::accumulate(y.begin(), y.end(), 0) != d - 1) return 0;
  if (d == 1) return 1;  // M_{0,2|1} is a point
  auto zero = std::find(y.begin(), y.end(), 0);
  if (zero == y.end()) return 0;
  std::vector<int> rest;
  rest.reserve(y.size() - 1);
  rest.insert(rest.end(), y.begin(), zero);
  rest.insert(rest.end(), zero + 1, y.end());
  return intersect_M02d(d - 1, x1 - 1, x2, rest) + intersect_M02d(d - 1, x1, x2 - 1, rest);
}

Rational psi_integral_M0n(const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  if (n < 3) throw InputError("psi_integral_M0n: need n >= 3 markings");
  int total = 0;
  for (int a : exponents) {
    if (a < 0) return 0;
    total += a;
  }
  if (total != n - 3) return 0;
  mpz_class denom = 1;
  for (int a : exponents) denom *= factorial(a);
  return Rational(factorial(n - 3), denom);
}

}  // namespace sqtaut
