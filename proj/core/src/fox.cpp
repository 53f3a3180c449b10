#include "foxdiv/fox.hpp"

namespace foxdiv {

Polynomial fox_derivative(const Word& w, Generator x) {
  Polynomial out;
  Word prefix;
  for (Letter l : w) {
    if (l.generator() == x) {
      if (l.is_inverse()) {
        Word term = prefix;
        term.push_back(l);
        out.add_term(term, -1);
      } else {
        out.add_term(prefix, 1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

Polynomial fox_power(long n, Generator x) {
  Polynomial out;
  if (n >= 0) {
    for (long k = 0; k < n; ++k) {
      out.add_term(Word::power(Letter(x, false), static_cast<std::size_t>(k)),
                   1);
    }
  } else {
    for (long k = 1; k <= -n; ++k) {
      out.add_term(Word::power(Letter(x, true), static_cast<std::size_t>(k)),
                   -1);
    }
  }
  return out;
}

Polynomial fox_of_relator(const Word& r1, const Word& r2, Generator x) {
  return fox_derivative(r1, x) - fox_derivative(r2, x);
}

}  // namespace foxdiv
