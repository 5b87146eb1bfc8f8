#pragma once

#include <string>
#include <vector>

#include "sqtaut/graded_poly.hpp"

namespace sqtaut {

/// Polynomial in kappa_1, kappa_2, ... and lambda_1..lambda_g at a fixed
/// genus g >= 2: the free model of classes on M_g.
///
/// kappa_0 is the scalar 2g-2 and kappa_{-1} is 0; both are substituted on
/// construction and never appear as generators. lambda_i vanishes for i > g.
class KLPoly {
 public:
  explicit KLPoly(int genus);
  KLPoly(int genus, GradedPoly poly);

  static KLPoly constant(int genus, const Rational& c);
  static KLPoly kappa(int genus, int index);
  static KLPoly lambda(int genus, int index);

  /// lambda_1..lambda_g (degree = index) followed by the unbounded kappa family.
  static const GeneratorsPtr& generators(int genus);
  static std::size_t kappa_position(int genus, int index);
  static std::size_t lambda_position(int index) { return static_cast<std::size_t>(index - 1); }

  int genus() const { return genus_; }
  const GradedPoly& poly() const { return poly_; }

  bool is_zero() const { return poly_.is_zero(); }
  bool has_lambda() const;
  int max_degree() const { return poly_.max_degree(); }
  bool is_homogeneous() const { return poly_.is_homogeneous(); }
  Rational constant_term() const { return poly_.constant_term(); }
  KLPoly homogeneous_part(int degree) const { return {genus_, poly_.homogeneous_part(degree)}; }

  KLPoly& operator+=(const KLPoly& o);
  KLPoly& operator-=(const KLPoly& o);
  KLPoly& operator*=(const Rational& c);
  friend KLPoly operator+(KLPoly a, const KLPoly& b) { return a += b; }
  friend KLPoly operator-(KLPoly a, const KLPoly& b) { return a -= b; }
  friend KLPoly operator-(KLPoly a) { return a *= Rational(-1); }
  friend KLPoly operator*(KLPoly a, const Rational& c) { return a *= c; }
  friend KLPoly operator*(const Rational& c, KLPoly a) { return a *= c; }
  friend KLPoly operator*(const KLPoly& a, const KLPoly& b);
  friend bool operator==(const KLPoly& a, const KLPoly& b) {
    return a.genus_ == b.genus_ && a.poly_ == b.poly_;
  }

  std::string str() const { return poly_.str(); }

 private:
  void require_genus(const KLPoly& o) const;

  int genus_;
  GradedPoly poly_;
};

KLPoly kl_mul(const KLPoly& a, const KLPoly& b, int maxdeg);

/// ch_k(E) in kappa classes: ch_0 = g, ch_{2l} = 0, ch_{2l-1} = B_{2l}/(2l)! kappa_{2l-1}.
KLPoly chern_character_E(int genus, int k);

/// Images of lambda_0..lambda_g in kappa classes (Newton's identities with
/// power sums p_k = k! ch_k). Built once per genus and cached.
const std::vector<KLPoly>& lambda_kappa_table(int genus);

/// Replaces every lambda_i by its kappa polynomial.
KLPoly lambda_to_kappa(const KLPoly& p);

/// c(E^*) = 1 - lambda_1 + lambda_2 - ... truncated at degree min(g, maxdeg).
KLPoly chern_E_dual(int genus, int maxdeg);

}  // namespace sqtaut
