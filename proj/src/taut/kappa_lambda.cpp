#include "sqtaut/kappa_lambda.hpp"

#include <map>
#include <mutex>

#include "sqtaut/bernoulli.hpp"
#include "sqtaut/errors.hpp"

namespace sqtaut {

namespace {

void require_genus_bound(int genus) {
  if (genus < 2) throw InputError("genus must be >= 2, got " + std::to_string(genus));
}

}  // namespace

const GeneratorsPtr& KLPoly::generators(int genus) {
  require_genus_bound(genus);
  static std::mutex mutex;
  static std::map<int, GeneratorsPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[genus];
  if (!slot) {
    slot = std::make_shared<const GeneratorSet>(std::vector<GeneratorFamily>{
        {"lambda", genus, 0, true},
        {"kappa", 0, 0, true},
    });
  }
  return slot;
}

std::size_t KLPoly::kappa_position(int genus, int index) {
  if (index < 1) throw InputError("kappa generator index must be >= 1");
  return static_cast<std::size_t>(genus + index - 1);
}

KLPoly::KLPoly(int genus) : genus_(genus), poly_(generators(genus)) {}

KLPoly::KLPoly(int genus, GradedPoly poly) : genus_(genus), poly_(std::move(poly)) {
  if (!(poly_.generators() == *generators(genus)))
    throw InputError("KLPoly: polynomial is not over the genus-" + std::to_string(genus) +
                     " kappa/lambda generators");
}

KLPoly KLPoly::constant(int genus, const Rational& c) {
  return {genus, GradedPoly::constant(generators(genus), c)};
}

KLPoly KLPoly::kappa(int genus, int index) {
  if (index < 0) return KLPoly(genus);
  if (index == 0) return constant(genus, 2 * genus - 2);
  return {genus, GradedPoly::generator(generators(genus), kappa_position(genus, index))};
}

KLPoly KLPoly::lambda(int genus, int index) {
  if (index < 0) throw InputError("lambda index must be >= 0");
  if (index == 0) return constant(genus, 1);
  if (index > genus) return KLPoly(genus);
  return {genus, GradedPoly::generator(generators(genus), lambda_position(index))};
}

bool KLPoly::has_lambda() const {
  for (const auto& [k, c] : poly_.terms())
    for (std::size_t i = 0; i < k.exps.size() && i < static_cast<std::size_t>(genus_); ++i)
      if (k.exps[i] != 0) return true;
  return false;
}

void KLPoly::require_genus(const KLPoly& o) const {
  if (genus_ != o.genus_) throw InputError("KLPoly genus mismatch");
}

KLPoly& KLPoly::operator+=(const KLPoly& o) {
  require_genus(o);
  poly_ += o.poly_;
  return *this;
}

KLPoly& KLPoly::operator-=(const KLPoly& o) {
  require_genus(o);
  poly_ -= o.poly_;
  return *this;
}

KLPoly& KLPoly::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

KLPoly operator*(const KLPoly& a, const KLPoly& b) {
  a.require_genus(b);
  return {a.genus_, a.poly_ * b.poly_};
}

KLPoly kl_mul(const KLPoly& a, const KLPoly& b, int maxdeg) {
  if (a.genus() != b.genus()) throw InputError("KLPoly genus mismatch");
  return {a.genus(), poly_mul(a.poly(), b.poly(), maxdeg)};
}

KLPoly chern_character_E(int genus, int k) {
  if (k < 0) throw InputError("chern character degree must be >= 0");
  if (k == 0) return KLPoly::constant(genus, genus);
  if (k % 2 == 0) return KLPoly(genus);
  Rational c = bernoulli(k + 1) / Rational(factorial(k + 1));
  return KLPoly::kappa(genus, k) * c;
}

const std::vector<KLPoly>& lambda_kappa_table(int genus) {
  require_genus_bound(genus);
  static std::mutex mutex;
  static std::map<int, std::vector<KLPoly>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(genus);
  if (it != cache.end()) return it->second;

  // Power sums of the Chern roots: p_k = k! ch_k.
  std::vector<KLPoly> power_sums(static_cast<std::size_t>(genus) + 1, KLPoly(genus));
  for (int k = 1; k <= genus; ++k)
    power_sums[static_cast<std::size_t>(k)] = chern_character_E(genus, k) * Rational(factorial(k));

  // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<KLPoly> e;
  e.reserve(static_cast<std::size_t>(genus) + 1);
  e.push_back(KLPoly::constant(genus, 1));
  for (int k = 1; k <= genus; ++k) {
    KLPoly acc(genus);
    for (int i = 1; i <= k; ++i) {
      KLPoly term = e[static_cast<std::size_t>(k - i)] * power_sums[static_cast<std::size_t>(i)];
      if (i % 2 == 0) acc -= term;
      else acc += term;
    }
    e.push_back(acc * Rational(1, k));
  }
  return cache.emplace(genus, std::move(e)).first->second;
}

KLPoly lambda_to_kappa(const KLPoly& p) {
  const int g = p.genus();
  if (!p.has_lambda()) return p;
  const auto& table = lambda_kappa_table(g);
  const auto& gens = KLPoly::generators(g);
  auto image = [&](std::size_t pos) -> GradedPoly {
    if (pos < static_cast<std::size_t>(g)) return table[pos + 1].poly();
    return GradedPoly::generator(gens, pos);
  };
  return {g, p.poly().substitute(image, gens)};
}

KLPoly chern_E_dual(int genus, int maxdeg) {
  KLPoly out(genus);
  for (int i = 0; i <= std::min(genus, maxdeg); ++i) {
    KLPoly l = KLPoly::lambda(genus, i);
    out += (i % 2 == 0) ? l : -l;
  }
  return out;
}

}  // namespace sqtaut
