#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqtaut/rational.hpp"

namespace sqtaut {

/// A run of generators sharing a name: x, or x_1, x_2, ... .
/// `count == 0` makes the family unbounded; only the last family may be.
struct GeneratorFamily {
  std::string name;
  int count = 1;
  int degree = 1;                // used when !degree_is_index
  bool degree_is_index = false;  // degree of x_i is i

  friend bool operator==(const GeneratorFamily&, const GeneratorFamily&) = default;
};

/// Ordered list of abstract generators, each with a nonnegative degree.
/// Generator positions are 0-based and run through the families in order.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<GeneratorFamily> families);

  /// One family per name, each a single generator of the given degree.
  static std::shared_ptr<const GeneratorSet> variables(const std::vector<std::string>& names,
                                                       const std::vector<int>& degrees);

  int degree(std::size_t pos) const;
  std::string name(std::size_t pos) const;
  /// Position of member `index` (1-based) of family `family`, if it exists.
  std::optional<std::size_t> position(std::string_view family, int index = 1) const;
  const std::vector<GeneratorFamily>& families() const { return families_; }

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.families_ == b.families_;
  }

 private:
  struct Located {
    std::size_t family;
    int index;  // 1-based within the family
  };
  Located locate(std::size_t pos) const;

  std::vector<GeneratorFamily> families_;
};

using GeneratorsPtr = std::shared_ptr<const GeneratorSet>;

/// Sparse polynomial over a GeneratorSet with Rational coefficients.
///
/// Monomials are exponent vectors with trailing zeros trimmed, keyed as
/// (weighted degree, exponents): iteration order is graded lexicographic,
/// ascending. Zero coefficients are never stored. When a truncation degree
/// is set, terms of higher degree are dropped on insertion.
class GradedPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  struct Key {
    int degree = 0;
    Exponents exps;
    auto operator<=>(const Key&) const = default;
  };
  using TermMap = std::map<Key, Rational>;

  explicit GradedPoly(GeneratorsPtr gens, std::optional<int> truncation = std::nullopt);

  static GradedPoly constant(GeneratorsPtr gens, const Rational& c,
                             std::optional<int> truncation = std::nullopt);
  static GradedPoly generator(GeneratorsPtr gens, std::size_t pos, const Rational& c = 1,
                              std::optional<int> truncation = std::nullopt);

  const GeneratorSet& generators() const { return *gens_; }
  const GeneratorsPtr& generators_ptr() const { return gens_; }
  std::optional<int> truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }

  int degree_of(const Exponents& e) const;
  /// Adds c times the monomial; merges with an existing term.
  void add_term(Exponents e, const Rational& c);
  void add_keyed(const Key& k, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  /// Highest degree present; -1 for the zero polynomial.
  int max_degree() const;
  int min_degree() const;
  bool is_homogeneous() const;

  GradedPoly homogeneous_part(int degree) const;
  GradedPoly truncated(int maxdeg) const;
  /// Same terms with the truncation tag cleared.
  GradedPoly untagged() const;

  /// Ring homomorphism into another ring: generator at position i maps to
  /// image(i). Products are truncated at `maxdeg` when given.
  GradedPoly substitute(const std::function<GradedPoly(std::size_t)>& image,
                        const GeneratorsPtr& target,
                        std::optional<int> maxdeg = std::nullopt) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator-(GradedPoly a) { return a *= Rational(-1); }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  /// Product truncated at the smaller operand truncation (if any).
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

  /// Equality compares generator sets and terms; the truncation tag is ignored.
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  /// Leading (highest grlex) term first, e.g. "25*kappa_1^3 - 1080*kappa_1*kappa_2".
  std::string str() const;

 private:
  void require_same_ring(const GradedPoly& o) const;

  GeneratorsPtr gens_;
  std::optional<int> truncation_;
  TermMap terms_;
};

/// Product with every term of degree > maxdeg discarded.
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b, int maxdeg);

/// q with p*q == 1 modulo degree > maxdeg. The degree-0 part of p must be 1.
GradedPoly truncated_inverse(const GradedPoly& p, int maxdeg);

GradedPoly poly_pow(const GradedPoly& p, int n, int maxdeg);

std::string format_monomial(const GeneratorSet& gens, const GradedPoly::Exponents& e);

}  // namespace sqtaut
