#include "foxdiv/words.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "foxdiv/error.hpp"

namespace foxdiv {

// ---------------------------------------------------------------------------
// Word

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

bool Word::starts_with(const Word& w) const {
  return w.size() <= size() &&
         std::equal(w.letters_.begin(), w.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& w) const {
  return w.size() <= size() &&
         std::equal(w.letters_.begin(), w.letters_.end(),
                    letters_.end() - static_cast<std::ptrdiff_t>(w.size()));
}

std::optional<std::size_t> Word::find(const Word& w, std::size_t from) const {
  if (from > size() || w.size() > size() - from) return std::nullopt;
  auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                        letters_.end(), w.letters_.begin(), w.letters_.end());
  if (it == letters_.end() && !w.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

bool Word::involves(Generator gen) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [gen](Letter l) { return l.generator() == gen; });
}

bool Word::is_freely_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  }
  return true;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names, bool with_inverses)
    : names_(std::move(names)), with_inverses_(with_inverses) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw AlphabetError("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw AlphabetError("duplicate generator '" + names_[i] + "'");
      }
    }
  }
  std::vector<Letter> order;
  for (Generator g = 0; g < names_.size(); ++g) {
    order.emplace_back(g, false);
    if (with_inverses_) order.emplace_back(g, true);
  }
  set_precedence(std::move(order));
}

void Alphabet::set_precedence(std::vector<Letter> descending) {
  const std::size_t expected = names_.size() * (with_inverses_ ? 2 : 1);
  std::vector<int> rank(names_.size() * 2, -1);
  for (std::size_t i = 0; i < descending.size(); ++i) {
    Letter l = descending[i];
    if (l.generator() >= names_.size()) {
      throw AlphabetError("precedence names an unknown generator");
    }
    if (l.is_inverse() && !with_inverses_) {
      throw AlphabetError("precedence lists an inverse letter in a "
                          "semigroup alphabet");
    }
    if (rank[l.code()] >= 0) {
      throw AlphabetError("precedence repeats letter '" + to_string(l, *this) +
                          "'");
    }
    rank[l.code()] = static_cast<int>(descending.size() - i);
  }
  if (descending.size() != expected) {
    throw AlphabetError("precedence must list all " + std::to_string(expected) +
                        " letters of the alphabet");
  }
  precedence_ = std::move(descending);
  rank_ = std::move(rank);
}

std::optional<Generator> Alphabet::find(std::string_view name) const {
  for (Generator g = 0; g < names_.size(); ++g) {
    if (names_[g] == name) return g;
  }
  return std::nullopt;
}

Generator Alphabet::generator(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw AlphabetError("unknown generator '" + std::string(name) + "'");
}

int Alphabet::rank(Letter l) const {
  if (!contains(l)) {
    throw AlphabetError("letter with code " + std::to_string(l.code()) +
                        " is not in the alphabet");
  }
  return rank_[l.code()];
}

std::vector<Letter> Alphabet::letters_ascending() const {
  return {precedence_.rbegin(), precedence_.rend()};
}

bool Alphabet::default_precedence() const {
  return *this == Alphabet(names_, with_inverses_);
}

// ---------------------------------------------------------------------------
// Free functions

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

std::strong_ordering deglex_compare(const Word& u, const Word& v,
                                    const Alphabet& a) {
  for (Letter l : u) a.rank(l);
  for (Letter l : v) a.rank(l);
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return a.rank(u[i]) <=> a.rank(v[i]);
  }
  return std::strong_ordering::equal;
}

std::vector<Split> find_intersection_overlaps(const Word& u, const Word& v) {
  std::vector<Split> out;
  const std::size_t max_overlap = std::min(u.size(), v.size());
  // Largest overlap first gives the shortest ambiguity word first.
  for (std::size_t k = max_overlap; k >= 1; --k) {
    if (k == u.size() || k == v.size()) continue;
    if (std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(),
                   v.begin())) {
      out.push_back({u.prefix(u.size() - k), v.suffix(v.size() - k)});
    }
  }
  return out;
}

std::vector<Split> find_inclusions(const Word& u, const Word& v) {
  std::vector<Split> out;
  if (v.size() > u.size()) return out;
  for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
    if (std::equal(v.begin(), v.end(),
                   u.begin() + static_cast<std::ptrdiff_t>(pos))) {
      out.push_back({u.prefix(pos), u.suffix(u.size() - pos - v.size())});
    }
  }
  return out;
}

Word longest_common_prefix(const Word& u, const Word& v) {
  auto [iu, iv] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
  return u.prefix(static_cast<std::size_t>(iu - u.begin()));
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& a) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  std::size_t tokens = 0;
  bool saw_identity = false;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    std::string_view token = text.substr(start, pos - start);
    ++tokens;
    const std::size_t column = start + 1;

    if (token == "1") {
      saw_identity = true;
      continue;
    }
    std::string_view name = token;
    long long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view power = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(power.data(),
                                       power.data() + power.size(), exponent);
      if (ec != std::errc() || ptr != power.data() + power.size()) {
        throw ParseError("bad exponent in '" + std::string(token) + "'", 0,
                         column);
      }
      if (exponent == 0) {
        throw ParseError("zero power in '" + std::string(token) + "'", 0,
                         column);
      }
    }
    auto gen = a.find(name);
    if (!gen) {
      throw ParseError("unknown generator '" + std::string(name) + "'", 0,
                       column);
    }
    Letter l(*gen, exponent < 0);
    if (!a.contains(l)) {
      throw ParseError("letter '" + std::string(token) +
                           "' is not in the alphabet",
                       0, column);
    }
    const auto count = static_cast<std::size_t>(exponent < 0 ? -exponent
                                                             : exponent);
    if (count > 1u << 20) {
      throw ParseError("power too large in '" + std::string(token) + "'", 0,
                       column);
    }
    out.insert(out.end(), count, l);
  }
  if (tokens == 0) throw ParseError("empty word (write 1 for the identity)");
  if (saw_identity && tokens > 1) {
    // `1` is only meaningful on its own.
    throw ParseError("'1' may only appear alone in a word");
  }
  return Word(std::move(out));
}

std::string to_string(Letter l, const Alphabet& a) {
  std::string s = a.name(l.generator());
  if (l.is_inverse()) s += "^-1";
  return s;
}

std::string to_string(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::size_t run = j - i;
    if (!out.empty()) out += ' ';
    out += a.name(w[i].generator());
    if (run > 1 || w[i].is_inverse()) {
      out += '^';
      if (w[i].is_inverse()) out += '-';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

}  // namespace foxdiv
