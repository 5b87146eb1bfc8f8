#include "sqtaut/pointed_class.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "sqtaut/errors.hpp"

namespace sqtaut {

namespace {

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

KLPoly clip(const KLPoly& c, std::optional<int> maxdeg) {
  if (!maxdeg) return {c.genus(), c.poly().untagged()};
  return {c.genus(), c.poly().truncated(*maxdeg).untagged()};
}

std::string join_points(const std::vector<int>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pts[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BlockMonomial

BlockMonomial BlockMonomial::unit(int d) {
  if (d < 0) throw InputError("number of light points must be >= 0");
  BlockMonomial m;
  for (int j = 1; j <= d; ++j) m.blocks.push_back({j});
  m.exponents.assign(static_cast<std::size_t>(d), 0);
  return m;
}

BlockMonomial BlockMonomial::from_parts(int d, std::vector<std::vector<int>> blocks,
                                        std::vector<int> exponents) {
  if (blocks.size() != exponents.size()) throw InputError("one exponent per block required");
  std::vector<int> seen(static_cast<std::size_t>(d) + 1, 0);
  std::vector<std::pair<std::vector<int>, int>> pairs;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto& blk = blocks[b];
    if (blk.empty()) throw InputError("empty block in partition");
    if (exponents[b] < 0) throw InputError("negative block exponent");
    std::sort(blk.begin(), blk.end());
    for (int j : blk) {
      if (j < 1 || j > d) throw InputError("light point " + std::to_string(j) + " out of range");
      if (seen[static_cast<std::size_t>(j)]++) throw InputError("blocks are not disjoint");
    }
    pairs.emplace_back(std::move(blk), exponents[b]);
  }
  for (int j = 1; j <= d; ++j)
    if (!seen[static_cast<std::size_t>(j)])
      throw InputError("partition does not cover point " + std::to_string(j));
  std::sort(pairs.begin(), pairs.end());
  BlockMonomial m;
  for (auto& [blk, t] : pairs) {
    m.blocks.push_back(std::move(blk));
    m.exponents.push_back(t);
  }
  return m;
}

int BlockMonomial::d() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

int BlockMonomial::degree() const {
  int deg = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    deg += exponents[b] + static_cast<int>(blocks[b].size()) - 1;
  return deg;
}

std::pair<int, BlockMonomial> multiply(const BlockMonomial& a, const BlockMonomial& b) {
  const int d = a.d();
  if (b.d() != d) throw InputError("multiply: monomials on different numbers of light points");
  std::vector<int> parent(static_cast<std::size_t>(d) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto ux = static_cast<std::size_t>(x);
      parent[ux] = parent[static_cast<std::size_t>(parent[ux])];
      x = parent[ux];
    }
    return x;
  };
  auto unite = [&](const BlockMonomial& m) {
    for (const auto& blk : m.blocks)
      for (std::size_t i = 1; i < blk.size(); ++i) {
        int r0 = find(blk[0]);
        int ri = find(blk[i]);
        if (r0 != ri) parent[static_cast<std::size_t>(std::max(r0, ri))] = std::min(r0, ri);
      }
  };
  unite(a);
  unite(b);

  // Per component U: merging blocks B_1..B_r costs (-psi-hat_U)^excess with
  // excess = sum |B_i| - r - |U| + 1, independent of the merge order.
  struct Acc {
    int size_sum = 0;
    int count = 0;
    int exponent = 0;
    std::vector<int> members;
  };
  std::vector<Acc> acc(static_cast<std::size_t>(d) + 1);
  auto collect = [&](const BlockMonomial& m) {
    for (std::size_t i = 0; i < m.blocks.size(); ++i) {
      auto& slot = acc[static_cast<std::size_t>(find(m.blocks[i][0]))];
      slot.size_sum += static_cast<int>(m.blocks[i].size());
      slot.count += 1;
      slot.exponent += m.exponents[i];
    }
  };
  collect(a);
  collect(b);
  for (int j = 1; j <= d; ++j) acc[static_cast<std::size_t>(find(j))].members.push_back(j);

  int sign = 1;
  BlockMonomial out;
  for (int j = 1; j <= d; ++j) {
    auto& slot = acc[static_cast<std::size_t>(j)];
    if (slot.members.empty()) continue;  // j is not a root
    int excess = slot.size_sum - slot.count - static_cast<int>(slot.members.size()) + 1;
    if (excess % 2) sign = -sign;
    out.blocks.push_back(std::move(slot.members));
    out.exponents.push_back(slot.exponent + excess);
  }
  // Roots are minimal elements, so blocks are already ordered by minimum.
  return {sign, std::move(out)};
}

// ---------------------------------------------------------------------------
// PointedClass

PointedClass::PointedClass(int genus, int d, std::optional<int> truncation)
    : genus_(genus), d_(d), truncation_(truncation) {
  KLPoly::generators(genus);  // validates genus
  if (d < 0) throw InputError("number of light points must be >= 0");
}

PointedClass PointedClass::unit(int genus, int d, std::optional<int> truncation) {
  PointedClass p(genus, d, truncation);
  p.add_term(BlockMonomial::unit(d), KLPoly::constant(genus, 1));
  return p;
}

PointedClass PointedClass::from_kl(int d, const KLPoly& coeff, std::optional<int> truncation) {
  PointedClass p(coeff.genus(), d, truncation);
  p.add_term(BlockMonomial::unit(d), coeff);
  return p;
}

PointedClass PointedClass::monomial(int genus, const BlockMonomial& m, const Rational& c) {
  PointedClass p(genus, m.d());
  p.add_term(m, KLPoly::constant(genus, c));
  return p;
}

PointedClass PointedClass::psi_hat(int genus, int d, int j) {
  if (j < 1 || j > d) throw InputError("psi-hat index out of range");
  BlockMonomial m = BlockMonomial::unit(d);
  m.exponents[static_cast<std::size_t>(j - 1)] = 1;
  return monomial(genus, m);
}

PointedClass PointedClass::diagonal(int genus, int d, std::vector<int> J) {
  if (J.empty()) throw InputError("diagonal over an empty set");
  std::sort(J.begin(), J.end());
  if (std::adjacent_find(J.begin(), J.end()) != J.end()) throw InputError("repeated point in diagonal");
  std::vector<std::vector<int>> blocks{J};
  for (int j = 1; j <= d; ++j)
    if (!std::binary_search(J.begin(), J.end(), j)) blocks.push_back({j});
  std::vector<int> exps(blocks.size(), 0);
  return monomial(genus, BlockMonomial::from_parts(d, std::move(blocks), std::move(exps)));
}

PointedClass PointedClass::delta(int genus, int d, int i) {
  if (i < 1 || i > d) throw InputError("Delta index out of range");
  PointedClass out(genus, d);
  for (int j = 1; j < i; ++j) out += diagonal(genus, d, {j, i});
  return out;
}

PointedClass PointedClass::symmetric_diagonal(int genus, int d) {
  PointedClass out(genus, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) out += diagonal(genus, d, {i, j});
  return out;
}

void PointedClass::add_term(const BlockMonomial& m, const KLPoly& coeff) {
  if (m.d() != d_) throw InputError("monomial on the wrong number of light points");
  if (coeff.genus() != genus_) throw InputError("coefficient of the wrong genus");
  const int mdeg = m.degree();
  std::optional<int> room;
  if (truncation_) {
    room = *truncation_ - mdeg;
    if (*room < 0) return;
  }
  KLPoly c = clip(coeff, room);
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int PointedClass::max_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree() + c.max_degree());
  return best;
}

int PointedClass::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) best = std::min(best, m.degree() + c.poly().min_degree());
  return terms_.empty() ? -1 : best;
}

PointedClass PointedClass::homogeneous_part(int degree) const {
  PointedClass out(genus_, d_, truncation_);
  for (const auto& [m, c] : terms_) {
    int k = degree - m.degree();
    if (k < 0) continue;
    KLPoly part = c.homogeneous_part(k);
    if (!part.is_zero()) out.terms_.emplace(m, std::move(part));
  }
  return out;
}

PointedClass PointedClass::truncated(int maxdeg) const {
  PointedClass out(genus_, d_, min_truncation(truncation_, maxdeg));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

KLPoly PointedClass::unit_coefficient() const {
  auto it = terms_.find(BlockMonomial::unit(d_));
  return it == terms_.end() ? KLPoly(genus_) : it->second;
}

PointedClass PointedClass::permuted(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(d_)) throw InputError("permutation has wrong size");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int j = 1; j <= d_; ++j)
    if (check[static_cast<std::size_t>(j - 1)] != j) throw InputError("not a permutation of 1..d");
  PointedClass out(genus_, d_, truncation_);
  for (const auto& [m, c] : terms_) {
    auto blocks = m.blocks;
    for (auto& blk : blocks)
      for (int& j : blk) j = perm[static_cast<std::size_t>(j - 1)];
    out.add_term(BlockMonomial::from_parts(d_, std::move(blocks), m.exponents), c);
  }
  return out;
}

void PointedClass::require_compatible(const PointedClass& o) const {
  if (genus_ != o.genus_ || d_ != o.d_)
    throw InputError("pointed classes on different spaces (genus or d mismatch)");
}

PointedClass& PointedClass::operator+=(const PointedClass& o) {
  require_compatible(o);
  if (o.truncation_ && (!truncation_ || *o.truncation_ < *truncation_)) {
    *this = truncated(*o.truncation_);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PointedClass& PointedClass::operator-=(const PointedClass& o) { return *this += -o; }

PointedClass& PointedClass::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, k] : terms_) k *= c;
  return *this;
}

PointedClass operator*(const PointedClass& a, const PointedClass& b) { return pc_mul(a, b); }

PointedClass operator*(const KLPoly& k, const PointedClass& a) {
  return pc_mul(PointedClass::from_kl(a.d(), k), a);
}

std::string PointedClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const GeneratorSet& gens = *KLPoly::generators(genus_);
  for (auto mit = terms_.rbegin(); mit != terms_.rend(); ++mit) {
    const BlockMonomial& m = mit->first;
    std::string blockpart;
    for (std::size_t b = 0; b < m.blocks.size(); ++b) {
      const auto& blk = m.blocks[b];
      int t = m.exponents[b];
      auto append = [&](const std::string& s) {
        if (!blockpart.empty()) blockpart += '*';
        blockpart += s;
      };
      if (t > 0) {
        std::string psi = blk.size() == 1 ? "psi_" + std::to_string(blk[0])
                                          : "psi_{" + join_points(blk) + "}";
        if (t > 1) psi += "^" + std::to_string(t);
        append(psi);
      }
      if (blk.size() > 1) append("D_{" + join_points(blk) + "}");
    }
    const auto& terms = mit->second.poly().terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      std::string klpart = format_monomial(gens, it->first.exps);
      std::string mono = klpart;
      if (!blockpart.empty()) mono += (mono.empty() ? "" : "*") + blockpart;
      const Rational& c = it->second;
      bool negative = c.sign() < 0;
      Rational mag = negative ? -c : c;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      if (mono.empty()) os << mag.str();
      else if (mag == Rational(1)) os << mono;
      else os << mag.str() << '*' << mono;
      first = false;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Ring operations

PointedClass pc_mul(const PointedClass& a, const PointedClass& b, int maxdeg) {
  if (a.genus() != b.genus() || a.d() != b.d())
    throw InputError("pc_mul: pointed classes on different spaces (genus or d mismatch)");
  auto t = min_truncation(min_truncation(a.truncation(), b.truncation()), maxdeg);
  const int limit = *t;
  if (limit == std::numeric_limits<int>::max()) t.reset();
  PointedClass out(a.genus(), a.d(), t);
  for (const auto& [ma, ca] : a.terms()) {
    const int da = ma.degree() + ca.poly().min_degree();
    if (da > limit) continue;
    for (const auto& [mb, cb] : b.terms()) {
      const int db = mb.degree() + cb.poly().min_degree();
      if (da + db > limit) continue;
      auto [sign, m] = multiply(ma, mb);
      KLPoly c = kl_mul(ca, cb, limit - m.degree());
      if (sign < 0) c *= Rational(-1);
      out.add_term(m, c);
    }
  }
  return out;
}

PointedClass pc_mul(const PointedClass& a, const PointedClass& b) {
  auto t = min_truncation(a.truncation(), b.truncation());
  return pc_mul(a, b, t.value_or(std::numeric_limits<int>::max()));
}

PointedClass pc_pow(const PointedClass& p, int n, int maxdeg) {
  if (n < 0) throw InputError("pc_pow: negative exponent");
  PointedClass r = PointedClass::unit(p.genus(), p.d(), maxdeg);
  for (int i = 0; i < n; ++i) r = pc_mul(r, p, maxdeg);
  return r;
}

PointedClass pc_inverse(const PointedClass& p, int maxdeg) {
  if (maxdeg < 0) throw InputError("pc_inverse: negative degree bound");
  PointedClass one = PointedClass::unit(p.genus(), p.d(), maxdeg);
  PointedClass degree0 = p.homogeneous_part(0);
  if (!(degree0 == PointedClass::unit(p.genus(), p.d())))
    throw DomainError("pc_inverse: degree-0 part must be 1, got " + degree0.str());
  PointedClass q = one - p.truncated(maxdeg);
  PointedClass r = one;
  for (int i = 0; i < maxdeg; ++i) r = one + pc_mul(q, r, maxdeg);
  return r;
}

PointedClass canonical_form(int genus, int d, const std::vector<ClassFactor>& word) {
  PointedClass out = PointedClass::unit(genus, d);
  for (const auto& f : word) {
    if (f.kind == ClassFactor::Kind::PsiHat) {
      if (f.points.size() != 1) throw InputError("psi-hat factor takes one point");
      out = pc_mul(out, PointedClass::psi_hat(genus, d, f.points[0]));
    } else {
      out = pc_mul(out, PointedClass::diagonal(genus, d, f.points));
    }
  }
  return out;
}

std::vector<ClassFactor> as_word(const BlockMonomial& m) {
  std::vector<ClassFactor> word;
  for (std::size_t b = 0; b < m.blocks.size(); ++b) {
    const auto& blk = m.blocks[b];
    if (blk.size() > 1) word.push_back({ClassFactor::Kind::Diagonal, blk});
    for (int i = 0; i < m.exponents[b]; ++i) word.push_back({ClassFactor::Kind::PsiHat, {blk[0]}});
  }
  return word;
}

// ---------------------------------------------------------------------------
// Pushforward and Chern classes

KLPoly epsilon_push(const PointedClass& c) {
  const int g = c.genus();
  KLPoly out(g);
  for (const auto& [m, coeff] : c.terms()) {
    KLPoly prod = coeff;
    for (int t : m.exponents) {
      if (t == 0) {
        prod = KLPoly(g);
        break;
      }
      prod = prod * KLPoly::kappa(g, t - 1);
    }
    out += prod;
  }
  return out;
}

PointedClass chern_B(int genus, int d, int maxdeg) {
  PointedClass out = PointedClass::unit(genus, d, maxdeg);
  for (int i = 1; i <= d; ++i) {
    PointedClass factor = PointedClass::unit(genus, d, maxdeg) + PointedClass::delta(genus, d, i) -
                          PointedClass::psi_hat(genus, d, i);
    out = pc_mul(out, factor, maxdeg);
  }
  return out;
}

PointedClass chern_F(int genus, int d, int maxdeg) {
  if (maxdeg < 0) throw InputError("chern_F: negative degree bound");
  PointedClass denominator_inverse = PointedClass::unit(genus, d, maxdeg);
  for (int i = 1; i <= d; ++i) {
    PointedClass factor = PointedClass::unit(genus, d, maxdeg) + PointedClass::delta(genus, d, i) -
                          PointedClass::psi_hat(genus, d, i);
    denominator_inverse = pc_mul(denominator_inverse, pc_inverse(factor, maxdeg), maxdeg);
  }
  return pc_mul(PointedClass::from_kl(d, chern_E_dual(genus, maxdeg), maxdeg), denominator_inverse,
                maxdeg);
}

KLPoly epsilon_chern_F(int genus, int d, int n) {
  if (n < 0) throw InputError("Chern degree must be >= 0, got " + std::to_string(n));
  if (d < 0) throw InputError("number of light points must be >= 0");
  return epsilon_push(chern_F(genus, d, n).homogeneous_part(n));
}

KLPoly theorem5_class(int genus, int d, int k) {
  if (d < 1) throw InputError("theorem5_class: d must be >= 1");
  if (k < 1) throw InputError("theorem5_class: k must be >= 1");
  int n = virtual_rank_F(genus, d) + 2 * k;
  if (n < 0)
    throw InputError("theorem5_class: target Chern degree g-d-1+2k = " + std::to_string(n) +
                     " is negative");
  return epsilon_chern_F(genus, d, n);
}

}  // namespace sqtaut
