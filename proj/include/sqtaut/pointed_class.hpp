#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqtaut/kappa_lambda.hpp"

namespace sqtaut {

/// A canonical monomial in the psi-hat and diagonal classes on M_{g,0|d}.
///
/// `blocks` is a set partition of {1..d}; each block is sorted and blocks are
/// ordered by their minimal element. A block B with |B| >= 2 stands for the
/// small diagonal D_B; its exponent t_B is the power of the common cotangent
/// class psi-hat_B restricted to D_B. Singletons carry plain psi-hat powers.
struct BlockMonomial {
  std::vector<std::vector<int>> blocks;
  std::vector<int> exponents;

  static BlockMonomial unit(int d);
  /// Validates and sorts an arbitrary (partition, exponents) pair.
  static BlockMonomial from_parts(int d, std::vector<std::vector<int>> blocks,
                                  std::vector<int> exponents);

  int d() const;
  /// sum t_B + sum (|B| - 1)
  int degree() const;

  auto operator<=>(const BlockMonomial&) const = default;
};

/// Product of two canonical monomials: the D-classes of overlapping blocks
/// merge with a factor (-psi-hat_U)^(excess) and the psi-hat exponents of all
/// merged blocks collect onto the union. Returns (sign, monomial).
std::pair<int, BlockMonomial> multiply(const BlockMonomial& a, const BlockMonomial& b);

/// Class on M_{g,0|d}: canonical monomials with kappa/lambda coefficients.
class PointedClass {
 public:
  using TermMap = std::map<BlockMonomial, KLPoly>;

  PointedClass(int genus, int d, std::optional<int> truncation = std::nullopt);

  static PointedClass unit(int genus, int d, std::optional<int> truncation = std::nullopt);
  static PointedClass from_kl(int d, const KLPoly& coeff, std::optional<int> truncation = std::nullopt);
  static PointedClass monomial(int genus, const BlockMonomial& m, const Rational& c = 1);
  static PointedClass psi_hat(int genus, int d, int j);
  /// D_J; the unit class when |J| == 1.
  static PointedClass diagonal(int genus, int d, std::vector<int> J);
  /// Delta_i = D_{1,i} + ... + D_{i-1,i} (Delta_1 = 0).
  static PointedClass delta(int genus, int d, int i);
  /// sum over i < j of D_{i,j}.
  static PointedClass symmetric_diagonal(int genus, int d);

  int genus() const { return genus_; }
  int d() const { return d_; }
  std::optional<int> truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }

  void add_term(const BlockMonomial& m, const KLPoly& coeff);

  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;
  int min_degree() const;
  bool is_homogeneous() const { return max_degree() == min_degree(); }
  PointedClass homogeneous_part(int degree) const;
  PointedClass truncated(int maxdeg) const;
  /// Coefficient of the unit monomial.
  KLPoly unit_coefficient() const;

  /// Relabels light point j as perm[j-1]; perm must be a permutation of 1..d.
  PointedClass permuted(const std::vector<int>& perm) const;

  PointedClass& operator+=(const PointedClass& o);
  PointedClass& operator-=(const PointedClass& o);
  PointedClass& operator*=(const Rational& c);
  friend PointedClass operator+(PointedClass a, const PointedClass& b) { return a += b; }
  friend PointedClass operator-(PointedClass a, const PointedClass& b) { return a -= b; }
  friend PointedClass operator-(PointedClass a) { return a *= Rational(-1); }
  friend PointedClass operator*(PointedClass a, const Rational& c) { return a *= c; }
  friend PointedClass operator*(const Rational& c, PointedClass a) { return a *= c; }
  friend PointedClass operator*(const PointedClass& a, const PointedClass& b);
  friend PointedClass operator*(const KLPoly& k, const PointedClass& a);

  /// Equality ignores the truncation tag.
  friend bool operator==(const PointedClass& a, const PointedClass& b) {
    return a.genus_ == b.genus_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// Flat sum of products, e.g. "-lambda_1*psi_1 + psi_{1,2}*D_{1,2}".
  std::string str() const;

 private:
  void require_compatible(const PointedClass& o) const;

  int genus_;
  int d_;
  std::optional<int> truncation_;
  TermMap terms_;
};

PointedClass pc_mul(const PointedClass& a, const PointedClass& b);
PointedClass pc_mul(const PointedClass& a, const PointedClass& b, int maxdeg);
PointedClass pc_pow(const PointedClass& p, int n, int maxdeg);
/// Inverse modulo degree > maxdeg; the degree-0 part of p must be exactly 1.
PointedClass pc_inverse(const PointedClass& p, int maxdeg);

/// One factor of an uncanonicalized word: psi-hat_j or D_J.
struct ClassFactor {
  enum class Kind { PsiHat, Diagonal } kind;
  std::vector<int> points;  // {j} for PsiHat, J for Diagonal
};

/// Multiplies out a word of psi-hat and diagonal factors into canonical form.
PointedClass canonical_form(int genus, int d, const std::vector<ClassFactor>& word);
/// Writes a canonical monomial back as a word (psi-hat_{min B}^t_B, D_B).
std::vector<ClassFactor> as_word(const BlockMonomial& m);

/// ε-pushforward to M_g: each canonical monomial maps to the product over
/// blocks of kappa_{t_B - 1}, with kappa_0 = 2g-2 and kappa_{-1} = 0.
KLPoly epsilon_push(const PointedClass& c);

/// Total Chern class c(E^*) / prod_i (1 + Delta_i - psi-hat_i), truncated.
PointedClass chern_F(int genus, int d, int maxdeg);
/// prod_i (1 + Delta_i - psi-hat_i), truncated; c(F_d) c(B_d) = c(E^*).
PointedClass chern_B(int genus, int d, int maxdeg);

/// ε_*(c_n(F_d)) for any n >= 0.
KLPoly epsilon_chern_F(int genus, int d, int n);

/// rank of F_d: g - d - 1.
inline int virtual_rank_F(int genus, int d) { return genus - d - 1; }

/// ε_*(c_{g-d-1+2k}(F_d)), asserted to vanish in R^*(M_g).
/// Homogeneous of degree g - 2d - 1 + 2k.
KLPoly theorem5_class(int genus, int d, int k);

}  // namespace sqtaut
