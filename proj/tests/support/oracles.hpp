#pragma once

// Independent reference implementations used as test oracles. They work on
// plain vectors of signed integers (+g / -g for generator g, 1-based) so that
// they share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "foxdiv/foxdiv.hpp"

namespace oracle {

using Letters = std::vector<int>;
using Poly = std::map<Letters, long long>;

inline Letters letters(const foxdiv::Word& w) {
  Letters out;
  for (auto l : w) {
    const int g = static_cast<int>(l.generator()) + 1;
    out.push_back(l.is_inverse() ? -g : g);
  }
  return out;
}

inline foxdiv::Word word(const Letters& v) {
  foxdiv::Word w;
  for (int s : v) {
    w.push_back(foxdiv::Letter(static_cast<foxdiv::Generator>(std::abs(s) - 1), s < 0));
  }
  return w;
}

inline Poly poly(const foxdiv::Polynomial& p) {
  Poly out;
  for (const auto& [w, c] : p.terms()) out[letters(w)] = static_cast<long long>(c);
  return out;
}

inline foxdiv::Polynomial polynomial(const Poly& p) {
  foxdiv::Polynomial out;
  for (const auto& [w, c] : p) out.add_term(word(w), c);
  return out;
}

inline void add(Poly& p, const Letters& w, long long c) {
  if (c == 0) return;
  auto& slot = p[w];
  slot += c;
  if (slot == 0) p.erase(w);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, c] : a) {
    for (const auto& [v, d] : b) {
      Letters uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      add(out, uv, c * d);
    }
  }
  return out;
}

/// Repeats one left-to-right cancellation pass until nothing changes.
inline Letters free_reduce(Letters w) {
  bool changed = true;
  while (changed) {
    changed = false;
    Letters next;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i + 1 < w.size() && w[i] == -w[i + 1]) {
        ++i;
        changed = true;
        continue;
      }
      next.push_back(w[i]);
    }
    w = std::move(next);
  }
  return w;
}

/// Fox derivative by its closed form: every occurrence of x at position k
/// contributes +prefix(k), every x^-1 contributes -prefix(k + 1).
inline Poly fox(const Letters& w, int x) {
  Poly out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == x) add(out, Letters(w.begin(), w.begin() + static_cast<long>(k)), 1);
    if (w[k] == -x) add(out, Letters(w.begin(), w.begin() + static_cast<long>(k) + 1), -1);
  }
  return out;
}

/// Rank of each letter under a descending precedence list (higher = greater).
using Ranks = std::map<int, int>;

inline Ranks default_ranks(int generators, bool inverses) {
  Ranks r;
  int next = 1000;
  for (int g = 1; g <= generators; ++g) {
    r[g] = next--;
    if (inverses) r[-g] = next--;
  }
  return r;
}

inline bool deglex_less(const Letters& u, const Letters& v, const Ranks& r) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return r.at(u[i]) < r.at(v[i]);
  }
  return false;
}

inline bool contains(const Letters& hay, const Letters& needle) {
  if (needle.empty()) return true;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

/// All words of length <= max_len avoiding every pattern, ascending deg-lex.
inline std::vector<Letters> avoiding(const std::vector<int>& alphabet,
                                     const std::vector<Letters>& patterns,
                                     std::size_t max_len, const Ranks& r) {
  std::vector<Letters> all{{}};
  std::vector<Letters> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Letters> next;
    for (const auto& w : frontier) {
      for (int a : alphabet) {
        Letters v = w;
        v.push_back(a);
        next.push_back(v);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<Letters> out;
  for (const auto& w : all) {
    bool ok = true;
    for (const auto& p : patterns) ok = ok && !contains(w, p);
    if (ok) out.push_back(w);
  }
  std::sort(out.begin(), out.end(),
            [&r](const Letters& a, const Letters& b) { return deglex_less(a, b, r); });
  return out;
}

/// Fixed-seed generator for random words and polynomials.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  long long range(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  bool coin() { return below(2) == 1; }

  /// Random word over generators 1..g (with inverses when `inverses`).
  Letters letters(std::size_t max_len, int g, bool inverses) {
    Letters w(below(max_len + 1));
    for (auto& s : w) {
      const int gen = static_cast<int>(below(static_cast<std::size_t>(g))) + 1;
      s = inverses && coin() ? -gen : gen;
    }
    return w;
  }

  Letters reduced_letters(std::size_t max_len, int g) {
    Letters w;
    const std::size_t len = below(max_len + 1);
    while (w.size() < len) {
      const int gen = static_cast<int>(below(static_cast<std::size_t>(g))) + 1;
      const int s = coin() ? -gen : gen;
      if (!w.empty() && w.back() == -s) continue;
      w.push_back(s);
    }
    return w;
  }

  foxdiv::Word word(std::size_t max_len, int g, bool inverses) {
    return oracle::word(letters(max_len, g, inverses));
  }

  foxdiv::Polynomial polynomial(std::size_t terms, std::size_t max_len, int g,
                                bool inverses, long long coeff = 3) {
    foxdiv::Polynomial p;
    const std::size_t n = below(terms + 1);
    for (std::size_t k = 0; k < n; ++k) {
      p.add_term(word(max_len, g, inverses), range(-coeff, coeff));
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
