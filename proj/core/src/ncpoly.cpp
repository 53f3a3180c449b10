#include "foxdiv/ncpoly.hpp"

#include <algorithm>
#include <cctype>

#include "foxdiv/error.hpp"

namespace foxdiv {

Integer Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [w, coef] : out.terms_) coef = -coef;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  }
  return out;
}

Polynomial sandwich(const Word& left, const Polynomial& p, const Word& right) {
  Polynomial out;
  for (const auto& [w, c] : p.terms_) out.add_term(left * w * right, c);
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

const Word& leading_monomial(const Polynomial& p, const Alphabet& a) {
  if (p.is_zero()) throw ZeroPolynomialError("leading term of 0");
  // The structural order already sorts by length, so only the longest block
  // needs a deg-lex scan.
  auto it = std::prev(p.terms().end());
  const Word* best = &it->first;
  const std::size_t len = best->size();
  while (it != p.terms().begin()) {
    --it;
    if (it->first.size() != len) break;
    if (deglex_compare(it->first, *best, a) > 0) best = &it->first;
  }
  for (Letter l : *best) a.rank(l);
  return *best;
}

LeadingTerm leading_term(const Polynomial& p, const Alphabet& a) {
  const Word& m = leading_monomial(p, a);
  return {p.coefficient(m), m};
}

bool is_monic(const Polynomial& p, const Alphabet& a) {
  return leading_term(p, a).coefficient == 1;
}

std::vector<std::pair<Word, Integer>> sorted_terms(const Polynomial& p,
                                                   const Alphabet& a) {
  std::vector<std::pair<Word, Integer>> out(p.terms().begin(),
                                            p.terms().end());
  std::sort(out.begin(), out.end(), [&a](const auto& x, const auto& y) {
    return deglex_compare(x.first, y.first, a) > 0;
  });
  return out;
}

std::string to_string(const Polynomial& p, const Alphabet& a) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : sorted_terms(p, a)) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += to_string(w, a);
    }
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

void parse_term(std::string_view text, std::size_t offset, bool negative,
                const Alphabet& a, Polynomial& out) {
  Integer coefficient = negative ? -1 : 1;
  Word word;
  std::size_t factors = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '*')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '*') {
      ++pos;
    }
    std::string_view token = text.substr(start, pos - start);
    ++factors;
    if (all_digits(token)) {
      coefficient *= Integer(std::string(token));
      continue;
    }
    try {
      word *= parse_word(token, a);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 0, offset + start + 1);
    }
  }
  if (factors == 0) throw ParseError("empty term", 0, offset + 1);
  out.add_term(word, coefficient);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Alphabet& a) {
  struct Segment {
    std::size_t begin;
    std::size_t end;
    bool negative;
  };
  std::vector<Segment> segments;
  std::size_t begin = 0;
  bool negative = false;
  char previous = '\0';
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == '+' || c == '-') && previous != '^') {
      segments.push_back({begin, i, negative});
      negative = c == '-';
      begin = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) previous = c;
  }
  segments.push_back({begin, text.size(), negative});

  Polynomial out;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const auto& seg = segments[k];
    std::string_view term = text.substr(seg.begin, seg.end - seg.begin);
    const bool blank = std::all_of(term.begin(), term.end(), [](char ch) {
      return std::isspace(static_cast<unsigned char>(ch));
    });
    if (blank) {
      // A leading sign leaves an empty first segment.
      if (k == 0 && segments.size() > 1) continue;
      throw ParseError("empty term", 0, seg.begin + 1);
    }
    parse_term(term, seg.begin, seg.negative, a, out);
  }
  return out;
}

}  // namespace foxdiv
