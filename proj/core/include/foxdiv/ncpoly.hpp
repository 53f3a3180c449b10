#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foxdiv/words.hpp"

namespace foxdiv {

using Integer = boost::multiprecision::cpp_int;

/// Finitely supported Z-linear combination of words (free algebra Z<X>).
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Word, Integer>;

  Polynomial() = default;
  Polynomial(const Word& w) { add_term(w, 1); }  // NOLINT: monomial
  Polynomial(const Word& w, Integer coefficient) {
    add_term(w, std::move(coefficient));
  }

  static Polynomial one() { return Polynomial(Word{}); }
  static Polynomial constant(Integer c) { return Polynomial(Word{}, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(const Word& w) const;

  /// Adds c * w; drops the entry if the coefficient becomes 0.
  void add_term(const Word& w, const Integer& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// left * p * right, monomials concatenated.
  friend Polynomial sandwich(const Word& left, const Polynomial& p,
                             const Word& right);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

Polynomial sandwich(const Word& left, const Polynomial& p, const Word& right);
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

struct LeadingTerm {
  Integer coefficient;
  Word monomial;
};

/// Deg-lex maximal term. Throws ZeroPolynomialError on 0.
LeadingTerm leading_term(const Polynomial& p, const Alphabet& a);
const Word& leading_monomial(const Polynomial& p, const Alphabet& a);
bool is_monic(const Polynomial& p, const Alphabet& a);

/// Terms greatest first.
std::vector<std::pair<Word, Integer>> sorted_terms(const Polynomial& p,
                                                   const Alphabet& a);

/// `x^2 - y^2`, `1 + 3*y x y`, `0`. Descending deg-lex.
std::string to_string(const Polynomial& p, const Alphabet& a);

/// Terms joined by `+`/`-`; inside a term, integer factors multiply the
/// coefficient and word tokens concatenate (`2*x y`, `-x^-1`, `1`).
Polynomial parse_polynomial(std::string_view text, const Alphabet& a);

}  // namespace foxdiv
