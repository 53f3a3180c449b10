#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foxdiv {

/// Index of a generator in its Alphabet's declaration list.
using Generator = std::uint32_t;

/// A generator or its formal inverse. Packed as `2 * generator + inverse`.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator gen, bool inverse)
      : code_(gen * 2u + (inverse ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr Generator generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1u) != 0; }
  constexpr int sign() const { return is_inverse() ? -1 : 1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }
  constexpr std::uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

/// Element of the free monoid on letters; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word power(Letter letter, std::size_t count) {
    return Word(std::vector<Letter>(count, letter));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  bool starts_with(const Word& w) const;
  bool ends_with(const Word& w) const;
  /// Position of the first occurrence of `w` at or after `from`.
  std::optional<std::size_t> find(const Word& w, std::size_t from = 0) const;
  bool contains(const Word& w) const { return find(w).has_value(); }
  bool involves(Generator gen) const;
  bool is_freely_reduced() const;

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Formal inverse: reversed with every letter inverted.
  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Structural shortlex order on letter codes. Only for containers; the
  /// monomial order is deglex_compare.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Generators plus a total precedence over the letters in use.
class Alphabet {
 public:
  Alphabet() = default;

  /// Generators in declaration order; default precedence g1 > g1^-1 > g2 > ...
  /// (inverse letters present only when `with_inverses`).
  Alphabet(std::vector<std::string> names, bool with_inverses);

  /// Replace the precedence. `descending` must list every letter of the
  /// alphabet exactly once, greatest first.
  void set_precedence(std::vector<Letter> descending);

  std::size_t generator_count() const { return names_.size(); }
  const std::string& name(Generator gen) const { return names_.at(gen); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Generator> find(std::string_view name) const;
  Generator generator(std::string_view name) const;
  bool with_inverses() const { return with_inverses_; }

  bool contains(Letter l) const {
    return l.code() < rank_.size() && rank_[l.code()] >= 0;
  }
  /// Larger rank means greater precedence. Throws AlphabetError on a stranger.
  int rank(Letter l) const;

  /// Letters greatest first.
  const std::vector<Letter>& precedence() const { return precedence_; }
  std::vector<Letter> letters_ascending() const;

  bool default_precedence() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  bool with_inverses_ = false;
  std::vector<Letter> precedence_;
  std::vector<int> rank_;
};

Word free_reduce(const Word& w);

/// Degree-lexicographic order: length first, then left-to-right precedence.
std::strong_ordering deglex_compare(const Word& u, const Word& v,
                                    const Alphabet& a);

struct DegLexLess {
  const Alphabet* alphabet;
  bool operator()(const Word& u, const Word& v) const {
    return deglex_compare(u, v, *alphabet) < 0;
  }
};

struct DegLexGreater {
  const Alphabet* alphabet;
  bool operator()(const Word& u, const Word& v) const {
    return deglex_compare(u, v, *alphabet) > 0;
  }
};

/// Factorization data (a, b) returned by overlap and inclusion search.
struct Split {
  Word a;
  Word b;
  friend bool operator==(const Split&, const Split&) = default;
};

/// All (a, b) with u b = a v, a and b nonempty, and |u| + |v| > |u b|.
/// Ordered by increasing length of the ambiguity word u b.
std::vector<Split> find_intersection_overlaps(const Word& u, const Word& v);

/// All (a, b) with u = a v b, in left-to-right order of occurrence.
std::vector<Split> find_inclusions(const Word& u, const Word& v);

Word longest_common_prefix(const Word& u, const Word& v);

/// Parses `y x^-2 y`, `1` (identity), `g^k` for nonzero k.
Word parse_word(std::string_view text, const Alphabet& a);

/// Inverse of parse_word; runs of one letter print as powers.
std::string to_string(const Word& w, const Alphabet& a);
std::string to_string(Letter l, const Alphabet& a);

}  // namespace foxdiv

template <>
struct std::hash<foxdiv::Word> {
  std::size_t operator()(const foxdiv::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto l : w) {
      h ^= l.code() + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};
