#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sqtaut/errors.hpp"
#include "sqtaut/genus_zero.hpp"

using namespace sqtaut;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  IntPoly out;
  for (long v : c) out.emplace_back(v);
  return out;
}

// String equation: remove a zero exponent, lower one positive exponent.
Rational string_oracle(std::vector<int> a) {
  int n = static_cast<int>(a.size());
  int sum = 0;
  for (int v : a) sum += v;
  if (sum != n - 3) return Rational(0);
  if (n == 3) return Rational(1);
  auto zero = std::find(a.begin(), a.end(), 0);
  if (zero == a.end()) return Rational(0);
  a.erase(zero);
  Rational total(0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    auto b = a;
    b[j] -= 1;
    total += string_oracle(b);
  }
  return total;
}

}  // namespace

TEST_CASE("compositions") {
  CHECK(compositions(1) == std::vector<Composition>{{1}});
  CHECK(compositions(3).size() == 4);
  for (int n = 1; n <= 12; ++n) CHECK(compositions(n).size() == (std::size_t{1} << (n - 1)));
  CHECK_THROWS_AS(compositions(0), InputError);
}

TEST_CASE("Poincare polynomial examples") {
  CHECK(poincare_Q02(1) == ip({1}));
  CHECK(poincare_Q02(2) == ip({1, 0, 1}));
  CHECK(poincare_Q02(4) == ip({1, 0, 3, 0, 3, 0, 1}));
  CHECK_THROWS_AS(poincare_Q02(0), InputError);
  CHECK_THROWS_AS(poincare_Q02(-3), InputError);
}

TEST_CASE("Poincare polynomial equals (1+t^2)^(d-1) through d = 12") {
  for (int d = 1; d <= 12; ++d) {
    IntPoly expected(static_cast<std::size_t>(2 * d - 1), 0);
    for (int i = 0; i <= d - 1; ++i) expected[static_cast<std::size_t>(2 * i)] = binomial(d - 1, i);
    REQUIRE(poincare_Q02(d) == expected);
    REQUIRE(poincare_closed_form(d) == expected);
  }
}

TEST_CASE("intersection examples") {
  CHECK(intersect_M02d(3, 1, 1, {0, 0, 0}) == Rational(2));
  CHECK(intersect_M02d(1, 0, 0, {0}) == Rational(1));
  CHECK(intersect_M02d(4, 3, 0, {0, 0, 0, 0}) == Rational(1));
  CHECK(intersect_M02d(4, 1, 1, {1, 0, 0, 0}) == Rational(0));
  CHECK(intersect_M02d(4, 1, 1, {0, 0, 0, 0}) == Rational(0));
  CHECK(intersect_M02d(3, 2, 1, {0, 0, 0}) == Rational(0));
  CHECK_THROWS_AS(intersect_M02d(3, 1, 1, {0, 0}), InputError);
}

TEST_CASE("recursion agrees with the multinomial through d = 10") {
  for (int d = 1; d <= 10; ++d)
    for (int x1 = 0; x1 <= d - 1; ++x1) {
      int x2 = d - 1 - x1;
      std::vector<int> y(static_cast<std::size_t>(d), 0);
      REQUIRE(intersect_M02d(d, x1, x2, y) == Rational(binomial(d - 1, x1)));
      REQUIRE(intersect_M02d(d, x1, x2, y) == intersect_M02d(d, x2, x1, y));
    }
}

TEST_CASE("intersections with psi-hat insertions vanish") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    int d = 2 + i % 7;
    std::vector<int> y(static_cast<std::size_t>(d), 0);
    std::uniform_int_distribution<int> pos(0, d - 1);
    int yd = 1 + i % (d - 1);
    for (int t = 0; t < yd; ++t) y[static_cast<std::size_t>(pos(rng))]++;
    std::uniform_int_distribution<int> split(0, d - 1 - yd);
    int x1 = split(rng);
    int x2 = d - 1 - yd - x1;
    REQUIRE(intersect_M02d(d, x1, x2, y) == Rational(0));
    REQUIRE(intersect_M02d(d, x2, x1, y) == Rational(0));
  }
}

TEST_CASE("psi integrals on M_{0,n}") {
  CHECK(psi_integral_M0n({0, 0, 0}) == Rational(1));
  CHECK(psi_integral_M0n({1, 0, 0, 0}) == Rational(1));
  CHECK(psi_integral_M0n({1, 1, 0, 0, 0}) == Rational(2));
  CHECK(psi_integral_M0n({2, 0, 0, 0, 0}) == Rational(1));
  CHECK(psi_integral_M0n({1, 1, 0, 0}) == Rational(0));
  CHECK_THROWS_AS(psi_integral_M0n({0, 0}), InputError);
  CHECK_THROWS_AS(psi_integral_M0n({}), InputError);
}

TEST_CASE("psi integrals match the string equation oracle and are symmetric") {
  std::mt19937 rng(99);
  for (int n = 3; n <= 9; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> a(static_cast<std::size_t>(n), 0);
      std::uniform_int_distribution<int> pos(0, n - 1);
      for (int t = 0; t < n - 3; ++t) a[static_cast<std::size_t>(pos(rng))]++;
      Rational v = psi_integral_M0n(a);
      REQUIRE(v == string_oracle(a));
      std::shuffle(a.begin(), a.end(), rng);
      REQUIRE(psi_integral_M0n(a) == v);
    }
}
