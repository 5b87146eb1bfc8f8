#include "sqtaut/curve_class.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sqtaut/errors.hpp"

namespace sqtaut {

using Kind = CurveClass::Carrier::Kind;

CurveClass::CurveClass(int genus, int d) : genus_(genus), d_(d) {
  KLPoly::generators(genus);
  if (d < 0) throw InputError("number of light points must be >= 0");
}

CurveClass CurveClass::pullback(const PointedClass& alpha) {
  CurveClass c(alpha.genus(), alpha.d());
  c.add_term({Kind::Omega, 0}, alpha);
  return c;
}

CurveClass CurveClass::omega(int genus, int d) {
  CurveClass c(genus, d);
  c.add_term({Kind::Omega, 1}, PointedClass::unit(genus, d));
  return c;
}

CurveClass CurveClass::sigma(int genus, int d, int i) {
  if (i < 1 || i > d) throw InputError("section index out of range");
  CurveClass c(genus, d);
  c.add_term({Kind::Sigma, i}, PointedClass::unit(genus, d));
  return c;
}

CurveClass CurveClass::s(int genus, int d) {
  CurveClass c(genus, d);
  for (int i = 1; i <= d; ++i) c += sigma(genus, d, i);
  return c;
}

void CurveClass::add_term(const Carrier& carrier, const PointedClass& coeff) {
  if (coeff.genus() != genus_ || coeff.d() != d_) throw InputError("coefficient on the wrong space");
  if (carrier.index < 0 || (carrier.kind == Kind::Sigma && (carrier.index < 1 || carrier.index > d_)))
    throw InputError("invalid carrier");
  if (coeff.is_zero()) return;
  auto it = terms_.find(carrier);
  if (it == terms_.end()) {
    terms_.emplace(carrier, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void CurveClass::require_compatible(const CurveClass& o) const {
  if (genus_ != o.genus_ || d_ != o.d_)
    throw InputError("curve classes on different spaces (genus or d mismatch)");
}

CurveClass& CurveClass::operator+=(const CurveClass& o) {
  require_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& o) {
  require_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

CurveClass& CurveClass::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

CurveClass operator*(const CurveClass& a, const CurveClass& b) { return cc_mul(a, b); }

std::string CurveClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << '(' << c.str() << ')';
    if (k.kind == Kind::Sigma) os << "*sigma_" << k.index;
    else if (k.index == 1) os << "*omega";
    else if (k.index > 1) os << "*omega^" << k.index;
    first = false;
  }
  return os.str();
}

CurveClass cc_mul(const CurveClass& a, const CurveClass& b) {
  if (a.genus() != b.genus() || a.d() != b.d())
    throw InputError("cc_mul: curve classes on different spaces (genus or d mismatch)");
  const int g = a.genus();
  const int d = a.d();
  CurveClass out(g, d);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      PointedClass coeff = pc_mul(ca, cb);
      if (ka.kind == Kind::Omega && kb.kind == Kind::Omega) {
        out.add_term({Kind::Omega, ka.index + kb.index}, coeff);
      } else if (ka.kind == Kind::Sigma && kb.kind == Kind::Sigma) {
        int i = ka.index;
        int j = kb.index;
        PointedClass factor = i == j ? -PointedClass::psi_hat(g, d, i)
                                     : PointedClass::diagonal(g, d, {i, j});
        out.add_term({Kind::Sigma, std::min(i, j)}, pc_mul(coeff, factor));
      } else {
        // omega^b sigma_i = psi-hat_i^b sigma_i
        int b_pow = ka.kind == Kind::Omega ? ka.index : kb.index;
        int i = ka.kind == Kind::Sigma ? ka.index : kb.index;
        PointedClass factor = pc_pow(PointedClass::psi_hat(g, d, i), b_pow,
                                     std::numeric_limits<int>::max());
        out.add_term({Kind::Sigma, i}, pc_mul(coeff, factor));
      }
    }
  }
  return out;
}

CurveClass cc_pow(const CurveClass& c, int n) {
  if (n < 0) throw InputError("cc_pow: negative exponent");
  CurveClass r = CurveClass::pullback(PointedClass::unit(c.genus(), c.d()));
  for (int i = 0; i < n; ++i) r = cc_mul(r, c);
  return r;
}

PointedClass pi_push(const CurveClass& c) {
  PointedClass out(c.genus(), c.d());
  for (const auto& [k, coeff] : c.terms()) {
    if (k.kind == Kind::Sigma) {
      out += coeff;
    } else if (k.index >= 1) {
      out += KLPoly::kappa(c.genus(), k.index - 1) * coeff;
    }
  }
  return out;
}

PointedClass pi_push_power(int genus, int d, int a, int b) {
  if (a < 0 || b < 0) throw InputError("exponents a, b must be >= 0");
  return pi_push(cc_mul(cc_pow(CurveClass::s(genus, d), a), cc_pow(CurveClass::omega(genus, d), b)));
}

KLPoly prop8_relation(int genus, int d, int a, int b, int c) {
  if (c <= 0) throw InputError("prop8_relation: c must be > 0 (the expression is only asserted zero then)");
  if (a < 0 || b < 0) throw InputError("prop8_relation: a, b must be >= 0");
  if (d < 0) throw InputError("prop8_relation: d must be >= 0");
  const int rank = virtual_rank_F(genus, d);
  const int first_chern = rank + c;
  const int target = rank - 1 + a + b + c;  // degree on M_{g,0|d}
  if (first_chern < 0 || target < 0)
    throw InputError("prop8_relation: negative Chern degree for these parameters");

  PointedClass cF = chern_F(genus, d, std::max(target, first_chern));
  PointedClass c_minus(genus, d);
  for (int i = 0; i <= target; ++i) {
    PointedClass part = cF.homogeneous_part(i);
    c_minus += (i % 2 == 0) ? part : -part;
  }

  PointedClass first = pc_mul(pi_push_power(genus, d, a, b), cF.homogeneous_part(first_chern));

  // (s - 1)^a omega^b, expanded binomially.
  CurveClass shifted(genus, d);
  CurveClass s = CurveClass::s(genus, d);
  CurveClass w_b = cc_pow(CurveClass::omega(genus, d), b);
  for (int j = 0; j <= a; ++j) {
    Rational coeff = Rational(binomial(a, j)) * Rational((a - j) % 2 == 0 ? 1 : -1);
    shifted += cc_mul(cc_pow(s, j), w_b) * coeff;
  }
  PointedClass second = pc_mul(pi_push(shifted), c_minus, target).homogeneous_part(target);
  if (rank % 2 != 0) second *= Rational(-1);

  return epsilon_push(first + second);
}

}  // namespace sqtaut
