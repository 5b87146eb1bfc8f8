#include "sqtaut/expression.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sqtaut/errors.hpp"

namespace sqtaut {

namespace {

struct Atom {
  std::string name;
  std::vector<int> indices;  // empty when no subscript
};

template <class T>
class Parser {
 public:
  struct Ring {
    std::function<T(const Rational&)> constant;
    std::function<T(const Atom&)> atom;
    std::function<T(const T&, const T&)> mul;
  };

  Parser(std::string_view text, Ring ring) : text_(text), ring_(std::move(ring)) {}

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    std::string s = digits();
    if (s.size() > 6) fail("integer too large");
    return std::stoi(s);
  }

  T expr() {
    T acc = term();
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  T term() {
    bool negate = accept('-');
    T acc = factor();
    while (accept('*')) acc = ring_.mul(acc, factor());
    if (negate) acc = acc * Rational(-1);
    return acc;
  }

  T power(T base) {
    if (!accept('^')) return base;
    int n = small_int();
    T acc = ring_.constant(1);
    for (int i = 0; i < n; ++i) acc = ring_.mul(acc, base);
    return acc;
  }

  T factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T inner = expr();
      expect(')');
      return power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den = 1;
      if (accept('/')) {
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      return ring_.constant(Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Atom a;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        a.name += text_[pos_++];
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        if (accept('{')) {
          a.indices.push_back(small_int());
          while (accept(',')) a.indices.push_back(small_int());
          expect('}');
        } else {
          a.indices.push_back(small_int());
        }
      }
      return power(ring_.atom(a));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Ring ring_;
  std::size_t pos_ = 0;
};

int single_index(const Atom& a) {
  if (a.indices.size() != 1) throw InputError(a.name + " takes exactly one index");
  return a.indices[0];
}

KLPoly kl_atom(int genus, const Atom& a) {
  if (a.name == "kappa") return KLPoly::kappa(genus, single_index(a));
  if (a.name == "lambda") {
    int i = single_index(a);
    if (i > genus) throw InputError("lambda_" + std::to_string(i) + " exceeds genus");
    return KLPoly::lambda(genus, i);
  }
  throw InputError("unknown symbol '" + a.name + "'");
}

}  // namespace

KLPoly parse_kl(int genus, std::string_view text) {
  Parser<KLPoly>::Ring ring{
      [genus](const Rational& c) { return KLPoly::constant(genus, c); },
      [genus](const Atom& a) { return kl_atom(genus, a); },
      [](const KLPoly& x, const KLPoly& y) { return x * y; },
  };
  return Parser<KLPoly>(text, ring).parse();
}

PointedClass parse_pointed(int genus, int d, std::string_view text) {
  auto atom = [genus, d](const Atom& a) -> PointedClass {
    if (a.name == "kappa" || a.name == "lambda") return PointedClass::from_kl(d, kl_atom(genus, a));
    if (a.name == "psi") {
      if (a.indices.empty()) throw InputError("psi needs an index");
      int j = a.indices[0];
      for (int i : a.indices) j = std::min(j, i);
      return PointedClass::psi_hat(genus, d, j);
    }
    if (a.name == "D") {
      if (a.indices.size() < 2) throw InputError("D needs at least two points");
      return PointedClass::diagonal(genus, d, a.indices);
    }
    if (a.name == "Delta") {
      if (a.indices.empty()) return PointedClass::symmetric_diagonal(genus, d);
      return PointedClass::delta(genus, d, single_index(a));
    }
    throw InputError("unknown symbol '" + a.name + "'");
  };
  Parser<PointedClass>::Ring ring{
      [genus, d](const Rational& c) { return PointedClass::unit(genus, d) * c; },
      atom,
      [](const PointedClass& x, const PointedClass& y) { return pc_mul(x, y); },
  };
  return Parser<PointedClass>(text, ring).parse();
}

}  // namespace sqtaut
