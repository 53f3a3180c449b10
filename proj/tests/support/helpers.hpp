#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foxdiv/foxdiv.hpp"

namespace helpers {

using namespace foxdiv;

/// Semigroup alphabet x > y.
inline Alphabet xy() { return Alphabet({"x", "y"}, false); }

/// Group alphabet x > x^-1 > y > y^-1 > z > z^-1.
inline Alphabet xyz() { return Alphabet({"x", "y", "z"}, true); }

inline Word W(std::string_view text, const Alphabet& a) { return parse_word(text, a); }
inline Polynomial P(std::string_view text, const Alphabet& a) {
  return parse_polynomial(text, a);
}

inline RewriteSystem system(const Alphabet& a, const std::vector<std::string>& polys) {
  std::vector<Polynomial> ps;
  for (const auto& p : polys) ps.push_back(parse_polynomial(p, a));
  return RewriteSystem(a, ps);
}

/// The worked example {x^2 - y^2, x y^2 - y^2 x} over x > y.
inline RewriteSystem lambda_system() {
  return system(xy(), {"x^2 - y^2", "x y^2 - y^2 x"});
}

inline Presentation group(std::string_view text) { return parse_presentation(text); }

inline Presentation cyclic(int n, std::string_view name = "g") {
  return parse_presentation("group\ngenerators: " + std::string(name) +
                            "\nrelator: " + std::string(name) + "^" +
                            std::to_string(n) + "\n");
}

}  // namespace helpers
