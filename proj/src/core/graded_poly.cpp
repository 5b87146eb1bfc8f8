#include "sqtaut/graded_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sqtaut/errors.hpp"

namespace sqtaut {

namespace {

void trim(GradedPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<GeneratorFamily> families) : families_(std::move(families)) {
  for (std::size_t i = 0; i < families_.size(); ++i) {
    const auto& f = families_[i];
    if (f.count < 0) throw InputError("generator family '" + f.name + "' has negative count");
    if (f.count == 0 && i + 1 != families_.size())
      throw InputError("only the last generator family may be unbounded");
    if (!f.degree_is_index && f.degree < 0)
      throw InputError("generator family '" + f.name + "' has negative degree");
  }
}

std::shared_ptr<const GeneratorSet> GeneratorSet::variables(const std::vector<std::string>& names,
                                                            const std::vector<int>& degrees) {
  if (names.size() != degrees.size()) throw InputError("names/degrees length mismatch");
  std::vector<GeneratorFamily> fams;
  for (std::size_t i = 0; i < names.size(); ++i) fams.push_back({names[i], 1, degrees[i], false});
  return std::make_shared<const GeneratorSet>(std::move(fams));
}

GeneratorSet::Located GeneratorSet::locate(std::size_t pos) const {
  std::size_t offset = 0;
  for (std::size_t f = 0; f < families_.size(); ++f) {
    const auto& fam = families_[f];
    if (fam.count == 0 || pos < offset + static_cast<std::size_t>(fam.count))
      return {f, static_cast<int>(pos - offset) + 1};
    offset += static_cast<std::size_t>(fam.count);
  }
  throw InputError("generator position " + std::to_string(pos) + " out of range");
}

int GeneratorSet::degree(std::size_t pos) const {
  auto [f, index] = locate(pos);
  return families_[f].degree_is_index ? index : families_[f].degree;
}

std::string GeneratorSet::name(std::size_t pos) const {
  auto [f, index] = locate(pos);
  const auto& fam = families_[f];
  if (fam.count == 1) return fam.name;
  return fam.name + "_" + std::to_string(index);
}

std::optional<std::size_t> GeneratorSet::position(std::string_view family, int index) const {
  std::size_t offset = 0;
  for (const auto& fam : families_) {
    if (fam.name == family) {
      if (index < 1 || (fam.count != 0 && index > fam.count)) return std::nullopt;
      return offset + static_cast<std::size_t>(index - 1);
    }
    offset += static_cast<std::size_t>(fam.count);
  }
  return std::nullopt;
}

GradedPoly::GradedPoly(GeneratorsPtr gens, std::optional<int> truncation)
    : gens_(std::move(gens)), truncation_(truncation) {
  if (!gens_) throw InputError("null generator set");
}

GradedPoly GradedPoly::constant(GeneratorsPtr gens, const Rational& c, std::optional<int> truncation) {
  GradedPoly p(std::move(gens), truncation);
  p.add_term(Exponents{}, c);
  return p;
}

GradedPoly GradedPoly::generator(GeneratorsPtr gens, std::size_t pos, const Rational& c,
                                 std::optional<int> truncation) {
  GradedPoly p(std::move(gens), truncation);
  Exponents e(pos + 1, 0);
  e[pos] = 1;
  p.add_term(std::move(e), c);
  return p;
}

int GradedPoly::degree_of(const Exponents& e) const {
  int deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) deg += gens_->degree(i) * static_cast<int>(e[i]);
  return deg;
}

void GradedPoly::add_term(Exponents e, const Rational& c) {
  trim(e);
  Key k{degree_of(e), std::move(e)};
  add_keyed(k, c);
}

void GradedPoly::add_keyed(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  if (truncation_ && k.degree > *truncation_) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational GradedPoly::coefficient(const Exponents& e) const {
  Exponents t = e;
  trim(t);
  auto it = terms_.find(Key{degree_of(t), t});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::constant_term() const { return coefficient({}); }

int GradedPoly::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }
int GradedPoly::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }
bool GradedPoly::is_homogeneous() const { return max_degree() == min_degree(); }

GradedPoly GradedPoly::homogeneous_part(int degree) const {
  GradedPoly out(gens_, truncation_);
  for (auto it = terms_.lower_bound(Key{degree, {}}); it != terms_.end() && it->first.degree == degree;
       ++it)
    out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
  return out;
}

GradedPoly GradedPoly::truncated(int maxdeg) const {
  GradedPoly out(gens_, min_truncation(truncation_, maxdeg));
  for (const auto& [k, c] : terms_) {
    if (k.degree > maxdeg) break;
    out.terms_.emplace_hint(out.terms_.end(), k, c);
  }
  return out;
}

GradedPoly GradedPoly::untagged() const {
  GradedPoly out = *this;
  out.truncation_.reset();
  return out;
}

GradedPoly GradedPoly::substitute(const std::function<GradedPoly(std::size_t)>& image,
                                  const GeneratorsPtr& target, std::optional<int> maxdeg) const {
  const int limit = maxdeg.value_or(std::numeric_limits<int>::max());
  std::map<std::size_t, GradedPoly> cache;
  auto img = [&](std::size_t pos) -> const GradedPoly& {
    auto it = cache.find(pos);
    if (it == cache.end()) {
      GradedPoly p = image(pos);
      if (!(p.generators() == *target)) throw InputError("substitution image in wrong ring");
      it = cache.emplace(pos, std::move(p)).first;
    }
    return it->second;
  };
  GradedPoly out(target, maxdeg);
  for (const auto& [k, c] : terms_) {
    GradedPoly term = GradedPoly::constant(target, c);
    for (std::size_t i = 0; i < k.exps.size(); ++i)
      for (std::uint32_t n = 0; n < k.exps[i]; ++n) term = poly_mul(term, img(i), limit);
    out += term;
  }
  return out;
}

void GradedPoly::require_same_ring(const GradedPoly& o) const {
  if (gens_ != o.gens_ && !(*gens_ == *o.gens_))
    throw InputError("polynomials over different generator sets");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_same_ring(o);
  truncation_ = min_truncation(truncation_, o.truncation_);
  if (truncation_) {
    while (!terms_.empty() && terms_.rbegin()->first.degree > *truncation_)
      terms_.erase(std::prev(terms_.end()));
  }
  for (const auto& [k, c] : o.terms_) add_keyed(k, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_same_ring(o);
  GradedPoly neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  auto t = min_truncation(a.truncation(), b.truncation());
  return poly_mul(a, b, t.value_or(std::numeric_limits<int>::max()));
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return *a.gens_ == *b.gens_ && a.terms_ == b.terms_;
}

std::string format_monomial(const GeneratorSet& gens, const GradedPoly::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    std::string mono = format_monomial(*gens_, it->first.exps);
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    Rational mag = negative ? -c : c;
    if (mono.empty()) {
      os << mag.str();
    } else {
      if (mag != Rational(1)) os << mag.str() << '*';
      os << mono;
    }
    first = false;
  }
  return os.str();
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b, int maxdeg) {
  if (!(a.generators() == b.generators()))
    throw InputError("poly_mul: polynomials over different generator sets");
  auto t = min_truncation(min_truncation(a.truncation(), b.truncation()), maxdeg);
  const int limit = *t;
  GradedPoly out(a.generators_ptr(), t);
  for (const auto& [ka, ca] : a.terms()) {
    if (ka.degree > limit) break;
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.degree + kb.degree > limit) break;
      GradedPoly::Exponents e(std::max(ka.exps.size(), kb.exps.size()), 0);
      for (std::size_t i = 0; i < ka.exps.size(); ++i) e[i] += ka.exps[i];
      for (std::size_t i = 0; i < kb.exps.size(); ++i) e[i] += kb.exps[i];
      out.add_keyed(GradedPoly::Key{ka.degree + kb.degree, std::move(e)}, ca * cb);
    }
  }
  return out;
}

GradedPoly truncated_inverse(const GradedPoly& p, int maxdeg) {
  if (maxdeg < 0) throw InputError("truncated_inverse: negative degree bound");
  GradedPoly degree0 = p.homogeneous_part(0);
  if (!(degree0 == GradedPoly::constant(p.generators_ptr(), 1)))
    throw DomainError("truncated_inverse: constant term must be 1, got " + degree0.str());
  // p = 1 - q with q of positive degree; iterate r <- 1 + q*r.
  GradedPoly one = GradedPoly::constant(p.generators_ptr(), 1, maxdeg);
  GradedPoly q = one - p.truncated(maxdeg);
  GradedPoly r = one;
  for (int i = 0; i < maxdeg; ++i) r = one + poly_mul(q, r, maxdeg);
  return r;
}

GradedPoly poly_pow(const GradedPoly& p, int n, int maxdeg) {
  if (n < 0) throw InputError("poly_pow: negative exponent");
  GradedPoly r = GradedPoly::constant(p.generators_ptr(), 1, maxdeg);
  for (int i = 0; i < n; ++i) r = poly_mul(r, p, maxdeg);
  return r;
}

}  // namespace sqtaut
