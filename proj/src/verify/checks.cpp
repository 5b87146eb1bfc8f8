#include "sqtaut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "sqtaut/curve_class.hpp"
#include "sqtaut/errors.hpp"
#include "sqtaut/genus_zero.hpp"
#include "sqtaut/local_cy.hpp"
#include "sqtaut/pairing.hpp"

namespace sqtaut {

namespace {

// Counts sub-checks and remembers the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = describe();
    }
  }
  bool passed() const { return failed_ == 0 && total_ > 0; }
  std::string detail() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " sub-checks";
    if (!first_.empty()) os << "; first failure: " << first_;
    return os.str();
  }

 private:
  long total_ = 0;
  long failed_ = 0;
  std::string first_;
};

std::string str_of(const IntPoly& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].get_str();
  return "[" + os.str() + "]";
}

void check_poincare(Tally& t) {
  for (int d = 1; d <= 12; ++d) {
    IntPoly expected(static_cast<std::size_t>(2 * d - 1), 0);
    for (int i = 0; i <= d - 1; ++i) expected[static_cast<std::size_t>(2 * i)] = binomial(d - 1, i);
    IntPoly got = poincare_Q02(d);
    t.expect(got == expected, [&] { return "d=" + std::to_string(d) + " gave " + str_of(got); });
  }
}

void check_m02d(Tally& t) {
  for (int d = 1; d <= 10; ++d) {
    std::vector<int> zero(static_cast<std::size_t>(d), 0);
    for (int x1 = 0; x1 <= d - 1; ++x1) {
      Rational v = intersect_M02d(d, x1, d - 1 - x1, zero);
      t.expect(v == Rational(binomial(d - 1, x1)),
               [&] { return "d=" + std::to_string(d) + " x1=" + std::to_string(x1) + " gave " + v.str(); });
    }
    // one psi-hat exponent moved onto each light point in turn
    for (int j = 0; j < d && d >= 2; ++j)
      for (int x1 = 0; x1 <= d - 2; ++x1) {
        std::vector<int> y = zero;
        y[static_cast<std::size_t>(j)] = 1;
        Rational v = intersect_M02d(d, x1, d - 2 - x1, y);
        t.expect(v.is_zero(), [&] { return "nonzero with y at d=" + std::to_string(d); });
      }
  }
}

void check_canonical_forms(Tally& t) {
  const int g = 5;
  auto D = [&](int d, std::vector<int> J) { return PointedClass::diagonal(g, d, std::move(J)); };
  auto psi = [&](int d, int j) { return PointedClass::psi_hat(g, d, j); };
  t.expect(pc_mul(D(3, {1, 2}), D(3, {2, 3})) == D(3, {1, 2, 3}), [] { return "D12*D23 != D123"; });
  t.expect(pc_mul(D(2, {1, 2}), D(2, {1, 2})) == -pc_mul(psi(2, 1), D(2, {1, 2})),
           [] { return "D12^2 != -psi_1 D12"; });
  t.expect(pc_mul(psi(2, 1), D(2, {1, 2})) == pc_mul(psi(2, 2), D(2, {1, 2})),
           [] { return "psi_1 D12 != psi_2 D12"; });
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> s;
    for (int j = 0; j < 4; ++j)
      if (mask & (1 << j)) s.push_back(j + 1);
    if (s.size() >= 2) subsets.push_back(s);
  }
  for (const auto& a : subsets)
    for (const auto& b : subsets)
      for (const auto& c : subsets) {
        bool ok = pc_mul(pc_mul(D(4, a), D(4, b)), D(4, c)) == pc_mul(D(4, a), pc_mul(D(4, b), D(4, c)));
        t.expect(ok, [] { return "diagonal triple product not associative"; });
      }
}

void check_push_expansion(Tally& t) {
  for (int g = 4; g <= 8; ++g) {
    PointedClass psi1 = PointedClass::psi_hat(g, 2, 1);
    PointedClass shifted = PointedClass::psi_hat(g, 2, 2) - PointedClass::symmetric_diagonal(g, 2);
    for (int i1 = 0; i1 <= 8; ++i1)
      for (int i2 = 0; i1 + i2 <= 8; ++i2) {
        KLPoly got = epsilon_push(pc_mul(pc_pow(psi1, i1, 8), pc_pow(shifted, i2, 8)));
        mpz_class c = (mpz_class(1) << static_cast<unsigned>(i2)) - 1;
        KLPoly want = KLPoly::kappa(g, i1 - 1) * KLPoly::kappa(g, i2 - 1) -
                      KLPoly::kappa(g, i1 + i2 - 2) * Rational(mpz_class(c));
        t.expect(got == want, [&] {
          return "g=" + std::to_string(g) + " i=(" + std::to_string(i1) + "," + std::to_string(i2) + ")";
        });
      }
  }
}

KLPoly d2_closed_form(int g) {
  auto k = [g](int a) { return KLPoly::kappa(g, a); };
  KLPoly out(g);
  for (int i = 2; i <= g - 1; ++i) {
    KLPoly inner(g);
    for (int i1 = 0; i1 <= i; ++i1) inner += k(i1 - 1) * k(i - i1 - 1);
    mpz_class c = (mpz_class(1) << static_cast<unsigned>(i + 1)) - i - 2;
    inner -= k(i - 2) * Rational(mpz_class(c));
    KLPoly term = KLPoly::lambda(g, g - 1 - i) * inner;
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

void check_d2_relation(Tally& t) {
  for (int g = 4; g <= 10; ++g) {
    KLPoly closed = d2_closed_form(g);
    // c(E*) weights lambda_j by (-1)^j; the closed form weights by (-1)^{g-1-j}.
    KLPoly expected = (g - 1) % 2 == 0 ? closed : -closed;
    t.expect(theorem5_class(g, 2, 1) == expected, [&] { return "g=" + std::to_string(g); });
  }
}

void check_genus6(Tally& t) {
  const int g = 6;
  KLPoly rel = lambda_to_kappa(theorem5_class(g, 2, 1));
  KLPoly k1 = KLPoly::kappa(g, 1), k2 = KLPoly::kappa(g, 2), k3 = KLPoly::kappa(g, 3);
  KLPoly target = k1 * k1 * k1 * Rational(25) + k3 * Rational(15912) - k1 * k2 * Rational(1080);
  t.expect(!rel.is_zero(), [] { return "relation vanished"; });
  if (rel.is_zero()) return;
  Rational scale = rel.poly().terms().rbegin()->second / target.poly().terms().rbegin()->second;
  t.expect(rel == target * scale, [&] { return "got " + rel.str(); });
}

void check_odd_shift(Tally& t) {
  for (int g = 2; g <= 10; ++g) {
    KLPoly expected(g);
    for (int i = 0; i <= g - 2; ++i) {
      KLPoly term = KLPoly::lambda(g, i) * KLPoly::kappa(g, g - 2 - i);
      expected += (i % 2 == 0) ? term : -term;
    }
    KLPoly got = epsilon_chern_F(g, 1, g - 1);
    t.expect(got == expected, [&] { return "g=" + std::to_string(g) + " got " + got.str(); });
  }
}

void check_pi_table(Tally& t) {
  for (int g = 2; g <= 9; ++g)
    for (int d = 1; d <= 4; ++d) {
      PointedClass sum_psi(g, d);
      for (int j = 1; j <= d; ++j) sum_psi += PointedClass::psi_hat(g, d, j);
      PointedClass one = PointedClass::unit(g, d);
      auto where = [&] { return "g=" + std::to_string(g) + " d=" + std::to_string(d); };
      t.expect(pi_push_power(g, d, 1, 0) == one * Rational(d), where);
      t.expect(pi_push_power(g, d, 0, 1) == one * Rational(2 * g - 2), where);
      t.expect(pi_push_power(g, d, 1, 1) == sum_psi, where);
      t.expect(pi_push_power(g, d, 2, 0) == -sum_psi + PointedClass::symmetric_diagonal(g, d) * Rational(2), where);

      int r = g - d - 1;
      if (r + 2 < 0) continue;
      PointedClass cF = chern_F(g, d, r + 3);
      KLPoly third = epsilon_push(pc_mul(PointedClass::symmetric_diagonal(g, d) * Rational(2), cF.homogeneous_part(r + 2)) +
                                  cF.homogeneous_part(r + 3) * Rational(d + g - 1));
      KLPoly sum = prop8_relation(g, d, 1, 1, 2) + prop8_relation(g, d, 2, 0, 2);
      // The two displayed relations add to twice the third one.
      t.expect(sum == third * Rational(2), [&] { return "summation at " + where(); });
    }
}

void check_pairing(Tally& t) {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= 5; ++k) {
      RankCertificate cert = rank_certificate(d, k);
      auto where = [&] { return "d=" + std::to_string(d) + " k=" + std::to_string(k); };
      t.expect(cert.valid, where);
      const auto& m = cert.matrix;
      for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
          const PairingEntry& e = m.entries[r][c];
          int lr = m.rows[r].length(), lc = m.cols[c].length();
          if (lr < lc) t.expect(e.status == PairingEntry::Status::ProvenZero, where);
          if (lr != lc) continue;
          t.expect(e.status != PairingEntry::Status::Unevaluated, where);
          if (r == c) {
            mpz_class prod = 1;
            for (int ti : m.rows[r].tau) prod *= ti + 1;
            t.expect(e.status == PairingEntry::Status::Computed && e.value == Rational(prod), where);
          } else {
            t.expect(e.value.is_zero(), where);
          }
        }
    }
}

void check_conifold(Tally& t) {
  LocalSeries s = conifold_F(12);
  GradedPoly prod = poly_mul(as_series(s), four_sin_half_squared(26), 26);
  for (int n = 0; n <= 26; ++n) {
    Rational c = prod.coefficient(GradedPoly::Exponents{static_cast<GradedPoly::Exponents::value_type>(n)});
    t.expect(c == Rational(n == 2 ? 1 : 0), [&] { return "t^" + std::to_string(n) + " coefficient " + c.str(); });
  }
  for (int g = 1; g <= 12; ++g)
    for (int d = 1; d <= 5; ++d) {
      Rational ratio = conifold_N(g, d, s) / s.n_g1[static_cast<std::size_t>(g - 1)];
      t.expect(ratio == pow(Rational(d), 2 * g - 3), [&] { return "g=" + std::to_string(g) + " d=" + std::to_string(d); });
    }
}

BlockMonomial random_monomial(std::mt19937& rng, int d, int maxdeg) {
  while (true) {
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= d; ++j) {
      std::uniform_int_distribution<std::size_t> b(0, blocks.size());
      std::size_t idx = b(rng);
      if (idx == blocks.size()) blocks.emplace_back();
      blocks[idx].push_back(j);
    }
    int base = d - static_cast<int>(blocks.size());
    if (base > maxdeg) continue;
    std::vector<int> exps(blocks.size(), 0);
    std::uniform_int_distribution<int> extra(0, maxdeg - base);
    std::uniform_int_distribution<std::size_t> which(0, blocks.size() - 1);
    for (int n = extra(rng); n > 0; --n) exps[which(rng)]++;
    return BlockMonomial::from_parts(d, blocks, exps);
  }
}

PointedClass random_linear(std::mt19937& rng, int g, int d) {
  std::uniform_int_distribution<int> c(-2, 2);
  PointedClass out = PointedClass::unit(g, d) * Rational(c(rng));
  for (int j = 1; j <= d; ++j) out += PointedClass::psi_hat(g, d, j) * Rational(c(rng));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) out += PointedClass::diagonal(g, d, {i, j}) * Rational(c(rng));
  return out + PointedClass::from_kl(d, KLPoly::lambda(g, 1) * Rational(c(rng)));
}

void check_properties(Tally& t) {
  const int g = 5;
  std::mt19937 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    int d = 1 + i % 6;
    BlockMonomial m = random_monomial(rng, d, 6);
    PointedClass a = PointedClass::monomial(g, m);
    t.expect(canonical_form(g, d, as_word(m)) == a, [] { return "canonical form not idempotent"; });
    PointedClass b = PointedClass::monomial(g, random_monomial(rng, d, 6));
    PointedClass c = PointedClass::monomial(g, random_monomial(rng, d, 6));
    t.expect(pc_mul(a, b) == pc_mul(b, a), [] { return "pc_mul not commutative"; });
    t.expect(pc_mul(pc_mul(a, b), c) == pc_mul(a, pc_mul(b, c)), [] { return "pc_mul not associative"; });

    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    PointedClass x = pc_mul(a, PointedClass::from_kl(d, KLPoly::lambda(g, 1 + i % g)) + b);
    t.expect(epsilon_push(x.permuted(perm)) == epsilon_push(x), [] { return "epsilon_push not symmetric"; });
  }
  for (int i = 0; i < 200; ++i) {
    int d = 1 + i % 4;
    PointedClass alpha = random_linear(rng, g, d);
    CurveClass curve = cc_mul(CurveClass::pullback(random_linear(rng, g, d)), CurveClass::sigma(g, d, 1 + i % d)) +
                       cc_mul(CurveClass::pullback(random_linear(rng, g, d)), cc_pow(CurveClass::omega(g, d), i % 3));
    t.expect(pi_push(cc_mul(CurveClass::pullback(alpha), curve)) == pc_mul(alpha, pi_push(curve)),
             [] { return "projection formula"; });
  }
  // Newton power sums of the lambda images: p_{2l} = (2l)! ch_{2l} must vanish.
  const int gm = 9;
  const auto& e = lambda_kappa_table(gm);
  auto E = [&](int i) { return i <= gm ? e[static_cast<std::size_t>(i)] : KLPoly(gm); };
  std::vector<KLPoly> p(9, KLPoly(gm));
  for (int k = 1; k <= 8; ++k) {
    KLPoly acc = E(k) * Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      KLPoly term = E(k - i) * p[static_cast<std::size_t>(i)];
      acc += ((k - 1 + i) % 2 == 0) ? term : -term;
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  for (int l = 1; l <= 4; ++l)
    t.expect(p[static_cast<std::size_t>(2 * l)].is_zero(), [&] { return "ch_" + std::to_string(2 * l) + " nonzero"; });
}

struct Entry {
  CheckInfo info;
  void (*run)(Tally&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"lemma4", "Poincare polynomial of Q_{0,2}(G(1,1),d) summed over strata equals (1+t^2)^{d-1}, d <= 12", 1},
       check_poincare},
      {{"m02d-intersections",
        "psi/psi-hat integrals on M_{0,2|d} by the forgetful recursion equal binom(d-1; x1,x2) and vanish when "
        "some y_j > 0, d <= 10",
        1},
       check_m02d},
      {{"canonical-forms",
        "D_12 D_23 = D_123, D_12^2 = -psi_1 D_12, psi_1 D_12 = psi_2 D_12, and diagonal products over {1..4} "
        "associate",
        1},
       check_canonical_forms},
      {{"push-expansion",
        "eps_*(psi_1^i1 (psi_2 - Delta)^i2) = -(2^i2 - 1) kappa_{i1+i2-2} + kappa_{i1-1} kappa_{i2-1}, "
        "i1+i2 <= 8, g = 4..8",
        5},
       check_push_expansion},
      {{"d2-relation",
        "the d=2, k=1 relation equals its lambda/kappa closed form (up to the global sign (-1)^{g-1}), g = 4..10",
        10},
       check_d2_relation},
      {{"genus6", "in genus 6 the d=2, k=1 relation is proportional to 25 k1^3 + 15912 k3 - 1080 k1 k2", 5},
       check_genus6},
      {{"odd-shift", "eps_* c_{g-1}(F_1) = kappa_{g-2} - lambda_1 kappa_{g-3} + ... , g <= 10", 5}, check_odd_shift},
      {{"pi-table",
        "pi_*(s) = d, pi_*(w) = 2g-2, pi_*(s w) = sum psi, pi_*(s^2) = -sum psi + 2 Delta; the (1,1,2) and "
        "(2,0,2) relations sum to twice the Delta relation, d <= 4, g <= 9",
        30},
       check_pi_table},
      {{"pairing-rank",
        "pairing matrix on P[d,k] is block triangular by length with diagonal blocks diag(prod(t_i+1)), "
        "d, k <= 5",
        30},
       check_pairing},
      {{"conifold",
        "F(t) (2 sin(t/2))^2 = t^2 through t^26 and N_{g,d} / N_{g,1} = d^{2g-3}, g <= 12, d <= 5", 1},
       check_conifold},
      {{"properties",
        "canonical-form idempotence, pc_mul commutativity/associativity, S_d symmetry of eps_*, projection "
        "formula, vanishing of ch_{2l}(E) after lambda elimination",
        60},
       check_properties},
  };
  return entries;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& only) {
  for (const auto& id : only) {
    bool known = std::any_of(registry().begin(), registry().end(), [&](const Entry& e) { return e.info.id == id; });
    if (!known) throw InputError("unknown check id: " + id);
  }
  std::vector<CheckResult> results;
  for (const auto& entry : registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), entry.info.id) == only.end()) continue;
    CheckResult r;
    r.info = entry.info;
    auto start = std::chrono::steady_clock::now();
    try {
      Tally t;
      entry.run(t);
      r.passed = t.passed();
      r.detail = t.detail();
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"id", r.info.id}, {"statement", r.info.statement}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"schema", "sq-taut/1"}, {"kind", "verification"}, {"passed", all}, {"checks", checks}};
}

}  // namespace sqtaut
