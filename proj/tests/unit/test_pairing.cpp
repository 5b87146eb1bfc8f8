#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sqtaut/errors.hpp"
#include "sqtaut/pairing.hpp"

using namespace sqtaut;

namespace {

mpz_class stirling2(int n, int k) {
  std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(n + 1),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          j * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

mpz_class count_oracle(int d, int k) {
  mpz_class total = 0;
  for (int l = std::max(1, d - k); l <= d; ++l) total += stirling2(d, l) * binomial(k - d + 2 * l - 1, l - 1);
  return total;
}

PairSpec spec(int d, int k, SetPartition p, std::vector<int> tau) { return PairSpec{d, k, std::move(p), std::move(tau)}; }

}  // namespace

TEST_CASE("set partitions are counted by Bell numbers") {
  const std::vector<std::size_t> bell{1, 2, 5, 15, 52, 203, 877};
  for (int d = 1; d <= 7; ++d) {
    auto parts = set_partitions(d);
    CHECK(parts.size() == bell[static_cast<std::size_t>(d - 1)]);
    std::set<SetPartition> unique(parts.begin(), parts.end());
    CHECK(unique.size() == parts.size());
  }
  CHECK_THROWS_AS(set_partitions(0), InputError);
}

TEST_CASE("enumerate_P examples") {
  CHECK(enumerate_P(1, 0) == std::vector<PairSpec>{spec(1, 0, {{1}}, {0})});
  CHECK(enumerate_P(2, 0) == std::vector<PairSpec>{spec(2, 0, {{1}, {2}}, {0, 0})});
  auto p21 = enumerate_P(2, 1);
  REQUIRE(p21.size() == 3);
  CHECK(p21[2] == spec(2, 1, {{1, 2}}, {0}));
  CHECK(p21[0].partition == SetPartition{{1}, {2}});
  CHECK(p21[1].partition == SetPartition{{1}, {2}});
  std::set<std::vector<int>> taus{p21[0].tau, p21[1].tau};
  CHECK(taus == std::set<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(enumerate_P(0, 1), InputError);
  CHECK_THROWS_AS(enumerate_P(2, -1), InputError);
}

TEST_CASE("enumeration size matches the Stirling count") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= 5; ++k) {
      auto all = enumerate_P(d, k);
      REQUIRE(mpz_class(static_cast<unsigned long>(all.size())) == count_oracle(d, k));
      for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(all[i - 1].length() >= all[i].length());
      for (const auto& s : all) {
        int sum = 0;
        for (int t : s.tau) sum += t;
        REQUIRE(sum == k - d + s.length());
        REQUIRE(s.length() >= d - k);
      }
    }
}

TEST_CASE("chain strata have dimension l + k") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= 5; ++k)
      for (const auto& s : enumerate_P(d, k)) {
        ChainStratum c = chain_stratum(s);
        REQUIRE(c.dimension() == s.length() + k);
        REQUIRE(c.heavy_markings == 4 + k - d + 2 * s.length());
        REQUIRE(c.components.size() == static_cast<std::size_t>(s.length() + 2));
        REQUIRE(c.components.front().heavy.size() == 2);
        REQUIRE(c.components.back().heavy.size() == 2);
        REQUIRE(c.components.front().light.empty());
        for (int i = 1; i <= s.length(); ++i) {
          const auto& comp = c.components[static_cast<std::size_t>(i)];
          REQUIRE(comp.heavy.size() == static_cast<std::size_t>(s.tau[static_cast<std::size_t>(i - 1)] + 1));
          REQUIRE(comp.light == s.partition[static_cast<std::size_t>(i - 1)]);
          REQUIRE(c.psi_labels[static_cast<std::size_t>(i - 1)] == comp.heavy.front());
        }
      }
}

TEST_CASE("pairing entry examples") {
  PairSpec short_row = spec(2, 1, {{1, 2}}, {0});
  PairSpec long_row = spec(2, 1, {{1}, {2}}, {1, 0});
  PairSpec other_tau = spec(2, 1, {{1}, {2}}, {0, 1});

  CHECK(pairing_entry(short_row, chain_stratum(long_row)).status == PairingEntry::Status::ProvenZero);
  CHECK(pairing_entry(long_row, chain_stratum(short_row)).status == PairingEntry::Status::Unevaluated);

  PairingEntry diag = pairing_entry(long_row, chain_stratum(long_row));
  CHECK(diag.status == PairingEntry::Status::Computed);
  CHECK(diag.value == Rational(2));
  PairingEntry off = pairing_entry(long_row, chain_stratum(other_tau));
  CHECK(off.status == PairingEntry::Status::Computed);
  CHECK(off.value == Rational(0));

  PairSpec a = spec(3, 2, {{1, 2}, {3}}, {1, 0});
  PairSpec b = spec(3, 2, {{1, 3}, {2}}, {1, 0});
  CHECK(pairing_entry(a, chain_stratum(b)).status == PairingEntry::Status::ProvenZero);

  PairSpec big = spec(3, 5, {{1}, {2}, {3}}, {2, 1, 2});
  CHECK(pairing_entry(big, chain_stratum(big)).value == Rational(18));
  CHECK_THROWS_AS(pairing_entry(big, chain_stratum(a)), InputError);
  CHECK(std::string(to_string(PairingEntry::Status::ProvenZero)) != to_string(PairingEntry::Status::Computed));
}

TEST_CASE("diagonal entries are the products of t_i + 1") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= 5; ++k)
      for (const auto& s : enumerate_P(d, k)) {
        mpz_class expected = 1;
        for (int t : s.tau) expected *= t + 1;
        PairingEntry e = pairing_entry(s, chain_stratum(s));
        REQUIRE(e.status == PairingEntry::Status::Computed);
        REQUIRE(e.value == Rational(expected));
      }
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{0, 1}, {1, 0}}) == 2);
  CHECK(exact_rank({{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}}) == 1);
  CHECK(exact_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
}

TEST_CASE("rank certificates exist for d, k <= 5") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= 5; ++k) {
      RankCertificate cert = rank_certificate(d, k);
      INFO("d=" << d << " k=" << k);
      REQUIRE(cert.valid);
      REQUIRE(cert.failures.empty());
      REQUIRE(cert.dimension == enumerate_P(d, k).size());
      REQUIRE(cert.proven_zero + cert.computed + cert.unevaluated == cert.dimension * cert.dimension);
      for (const auto& b : cert.blocks) {
        REQUIRE(b.is_diagonal);
        REQUIRE(b.rank == b.size);
        REQUIRE(b.min_diagonal >= Rational(1));
      }
      const auto& m = cert.matrix;
      for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
          int lr = m.rows[r].length(), lc = m.cols[c].length();
          auto st = m.entries[r][c].status;
          if (lr < lc) REQUIRE(st == PairingEntry::Status::ProvenZero);
          if (lr == lc) REQUIRE(st != PairingEntry::Status::Unevaluated);
          if (lr > lc) REQUIRE(st == PairingEntry::Status::Unevaluated);
        }
    }
  CHECK_THROWS_AS(rank_certificate(6, 1), InputError);
  CHECK_THROWS_AS(rank_certificate(2, 6), InputError);
  CHECK(rank_certificate(6, 1, 6, 6).valid);
}
