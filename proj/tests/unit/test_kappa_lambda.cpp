#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sqtaut/bernoulli.hpp"
#include "sqtaut/errors.hpp"
#include "sqtaut/kappa_lambda.hpp"

using namespace sqtaut;

namespace {

KLPoly k(int g, int a) { return KLPoly::kappa(g, a); }
KLPoly l(int g, int i) { return KLPoly::lambda(g, i); }

// Inverse Newton route: from elementary symmetric e_1..e_n back to power sums,
// p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{k-1+i} e_{k-i} p_i.
std::vector<KLPoly> power_sums_from_chern(int g, const std::vector<KLPoly>& e, int upto) {
  std::vector<KLPoly> p(static_cast<std::size_t>(upto) + 1, KLPoly(g));
  auto E = [&](int i) { return i <= g ? e[static_cast<std::size_t>(i)] : KLPoly(g); };
  for (int kk = 1; kk <= upto; ++kk) {
    KLPoly acc = E(kk) * Rational(kk) * Rational((kk - 1) % 2 == 0 ? 1 : -1);
    for (int i = 1; i < kk; ++i) {
      KLPoly t = E(kk - i) * p[static_cast<std::size_t>(i)];
      acc += ((kk - 1 + i) % 2 == 0) ? t : -t;
    }
    p[static_cast<std::size_t>(kk)] = acc;
  }
  return p;
}

KLPoly random_kl(std::mt19937& rng, int g) {
  std::uniform_int_distribution<int> nterms(0, 3), idx(1, g), kidx(1, 4), coef(-4, 4), pick(0, 1);
  KLPoly p(g);
  for (int t = nterms(rng); t > 0; --t) {
    KLPoly m = KLPoly::constant(g, coef(rng));
    for (int f = 0; f < 2; ++f) m = m * (pick(rng) ? l(g, idx(rng)) : k(g, kidx(rng)));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("kappa_0 and kappa_{-1} are scalars") {
  CHECK(k(5, 0) == KLPoly::constant(5, 8));
  CHECK(k(5, -1).is_zero());
  CHECK(l(3, 0) == KLPoly::constant(3, 1));
  CHECK(l(3, 4).is_zero());
  CHECK_THROWS_AS(KLPoly(1), InputError);
}

TEST_CASE("lambda_to_kappa examples") {
  // Oracle: c_1 = ch_1 = B_2/2! kappa_1; c_2 = (ch_1^2 - 2 ch_2)/2 with ch_2 = 0.
  const int g = 4;
  Rational ch1 = bernoulli(2) / Rational(2);
  CHECK(ch1 == Rational(1, 12));
  CHECK(lambda_to_kappa(l(g, 1)) == k(g, 1) * Rational(1, 12));
  CHECK(lambda_to_kappa(l(g, 2)) == k(g, 1) * k(g, 1) * (ch1 * ch1 / Rational(2)));
  CHECK(lambda_to_kappa(l(g, 2)) == k(g, 1) * k(g, 1) * Rational(1, 288));
  KLPoly pure = k(g, 1) * k(g, 2) * Rational(3) - k(g, 3);
  CHECK(lambda_to_kappa(pure) == pure);
  CHECK_FALSE(lambda_to_kappa(l(g, 3) * k(g, 1) + l(g, 4)).has_lambda());
}

TEST_CASE("chern_E_dual examples") {
  CHECK(chern_E_dual(2, 2) == KLPoly::constant(2, 1) - l(2, 1) + l(2, 2));
  CHECK(chern_E_dual(5, 1) == KLPoly::constant(5, 1) - l(5, 1));
  for (int g = 2; g <= 7; ++g) CHECK(chern_E_dual(g, 0) == KLPoly::constant(g, 1));
  CHECK(chern_E_dual(3, 9) == KLPoly::constant(3, 1) - l(3, 1) + l(3, 2) - l(3, 3));
}

TEST_CASE("lambda images are homogeneous of their index") {
  for (int g = 2; g <= 9; ++g) {
    const auto& table = lambda_kappa_table(g);
    for (int i = 1; i <= g; ++i) {
      const KLPoly& img = table[static_cast<std::size_t>(i)];
      CHECK(img.is_homogeneous());
      CHECK(img.max_degree() == i);
      CHECK_FALSE(img.has_lambda());
    }
  }
}

TEST_CASE("Mumford vanishing is reproduced by the kappa images") {
  const int g = 9;
  const auto& e = lambda_kappa_table(g);
  auto p = power_sums_from_chern(g, e, 8);
  for (int ell = 1; ell <= 4; ++ell) {
    CHECK(p[static_cast<std::size_t>(2 * ell)].is_zero());
    // p_{2l-1} = (2l-1)! ch_{2l-1}
    Rational expected = bernoulli(2 * ell) / Rational(factorial(2 * ell)) * Rational(factorial(2 * ell - 1));
    CHECK(p[static_cast<std::size_t>(2 * ell - 1)] == k(g, 2 * ell - 1) * expected);
  }
}

TEST_CASE("lambda_to_kappa is a ring homomorphism") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int g = 3 + i % 5;
    KLPoly a = random_kl(rng, g);
    KLPoly b = random_kl(rng, g);
    REQUIRE(lambda_to_kappa(a * b) == lambda_to_kappa(a) * lambda_to_kappa(b));
    REQUIRE(lambda_to_kappa(a + b) == lambda_to_kappa(a) + lambda_to_kappa(b));
  }
}

TEST_CASE("genus mismatch is an input error") {
  CHECK_THROWS_AS(k(3, 1) + k(4, 1), InputError);
  CHECK_THROWS_AS(k(3, 1) * k(4, 1), InputError);
}
