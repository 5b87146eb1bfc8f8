#pragma once

#include <map>
#include <string>

#include "sqtaut/pointed_class.hpp"

namespace sqtaut {

/// Class on the universal curve U over M_{g,0|d}, in the normal form
///   sum_b pi^*(alpha_b) omega^b + sum_i pi^*(beta_i) sigma_i
/// where omega = c_1(omega_pi) and sigma_i is the class of the i-th section.
/// Products are reduced with
///   sigma_i^2 = -psi-hat_i sigma_i,
///   sigma_i sigma_j = D_{i,j} sigma_min(i,j),
///   omega sigma_i = psi-hat_i sigma_i.
class CurveClass {
 public:
  struct Carrier {
    enum class Kind { Omega, Sigma } kind;
    int index;  // power b for Omega, section i for Sigma
    auto operator<=>(const Carrier&) const = default;
    int degree() const { return kind == Kind::Omega ? index : 1; }
  };
  using TermMap = std::map<Carrier, PointedClass>;

  CurveClass(int genus, int d);

  static CurveClass pullback(const PointedClass& alpha);
  static CurveClass omega(int genus, int d);
  static CurveClass sigma(int genus, int d, int i);
  /// s = sigma_1 + ... + sigma_d = c_1(S_U^*)
  static CurveClass s(int genus, int d);

  int genus() const { return genus_; }
  int d() const { return d_; }
  const TermMap& terms() const { return terms_; }

  void add_term(const Carrier& carrier, const PointedClass& coeff);

  CurveClass& operator+=(const CurveClass& o);
  CurveClass& operator-=(const CurveClass& o);
  CurveClass& operator*=(const Rational& c);
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
  friend CurveClass operator*(CurveClass a, const Rational& c) { return a *= c; }
  friend CurveClass operator*(const CurveClass& a, const CurveClass& b);
  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.genus_ == b.genus_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  void require_compatible(const CurveClass& o) const;

  int genus_;
  int d_;
  TermMap terms_;
};

CurveClass cc_mul(const CurveClass& a, const CurveClass& b);
CurveClass cc_pow(const CurveClass& c, int n);

/// pi_*: sigma_i -> 1, omega^{b+1} -> kappa_b (kappa_0 = 2g-2), omega^0 -> 0.
PointedClass pi_push(const CurveClass& c);

/// pi_*(s^a omega^b).
PointedClass pi_push_power(int genus, int d, int a, int b);

/// ε_*( pi_*(s^a w^b) c_{g-d-1+c}(F_d)
///      + (-1)^{g-d-1} [ pi_*((s-1)^a w^b) c_-(F_d) ]^{g-d-2+a+b+c} ),
/// where c_-(F) = sum (-1)^i c_i(F) and [.]^n is the degree-n part taken
/// after the product. Asserted to vanish for c > 0.
/// Homogeneous of degree g - 2d - 2 + a + b + c.
KLPoly prop8_relation(int genus, int d, int a, int b, int c);

}  // namespace sqtaut
