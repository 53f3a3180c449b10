#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <variant>

#include "support/helpers.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace foxdiv;
using helpers::W;

namespace {

/// Line and column of the ParseError raised by `parse`.
template <typename F>
std::pair<std::size_t, std::size_t> error_at(F&& parse) {
  try {
    parse();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("parse_presentation") {
  const Presentation p = parse_presentation(
      "# comment\n"
      "group\n"
      "generators: x y1\n"
      "\n"
      "relator: y1 x y1 x y1 = y1   # trailing comment\n"
      "relator: x^2\n");
  CHECK(p.kind == PresentationKind::group);
  CHECK(p.alphabet.names() == std::vector<std::string>{"x", "y1"});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0].lhs == W("y1 x y1 x y1", p.alphabet));
  CHECK(p.relators[0].rhs == W("y1", p.alphabet));
  CHECK(p.relators[1].rhs.empty());

  const Presentation s = parse_presentation("semigroup\ngenerators: x y\nrelator: x^2 = y^2\n");
  CHECK(s.kind == PresentationKind::semigroup);
  CHECK_FALSE(s.alphabet.with_inverses());

  const Presentation o = parse_presentation("group\ngenerators: x\norder: x^-1 x\nrelator: x^2\n");
  CHECK(o.alphabet.precedence().front() == Letter(0, true));
}

TEST_CASE("parse errors carry line and column") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(error_at([] { parse_presentation("group\ngenerators: x\nrelator: x q\n"); }) == P{3, 12});
  CHECK(error_at([] { parse_presentation("group\ngenerators: x\nrelator: x^0\n"); }) == P{3, 10});
  CHECK(error_at([] { parse_presentation("groupp\n"); }) == P{1, 1});
  CHECK(error_at([] { parse_presentation("group\nrelator: x\n"); }) == P{2, 1});
  CHECK(error_at([] { parse_presentation("group\ngenerators: x x\n"); }).first == 2);
  CHECK(error_at([] { parse_presentation("group\ngenerators: x\nrelator: x = x = x\n"); }) ==
        P{3, 16});
  CHECK(error_at([] { parse_presentation("group\ngenerators: x\nbogus\n"); }) == P{3, 1});
  CHECK(error_at([] { parse_presentation(""); }) == P{1, 1});
  CHECK(error_at([] { parse_presentation("group\n"); }).first == 1);
  CHECK(error_at([] { parse_presentation("semigroup\ngenerators: x\nrelator: x^-1\n"); })
            .first == 3);
  CHECK(error_at([] { parse_family("family\ny-generators: 1\nw: y1\nrelator 2: u = 1 ; v = 1\n"); })
            .first == 4);
  CHECK(error_at([] { parse_family("family\ny-generators: 1\nw: y2\n"); }).first == 3);
  CHECK(error_at([] { parse_family("family\ny-generators: 1\nw: y1\nrelator 1: u = 1, , y1 ; v = 1\n"); })
            .first == 4);
  CHECK(error_at([] { parse_family("family\nw: y1\n"); }).first == 2);
}

TEST_CASE("parse_family") {
  const FamilySpec s = parse_family(
      "family\n"
      "y-generators: 1\n"
      "w: y1\n"
      "relator 1: u = 1, 1, y1 ; v = y1\n");
  CHECK(s.ell == 1);
  CHECK(s.w == Word{Letter(1, false)});
  REQUIRE(s.relators.size() == 1);
  CHECK(s.relators[0].u.size() == 3);
  CHECK(s.relators[0].u[0].empty());
  CHECK(s.relators[0].v.size() == 1);
  CHECK(build_family(s).relators[0].lhs == W("y1 x y1 x y1", s.alphabet()));
}

TEST_CASE("parse_input_text dispatches on the first keyword") {
  CHECK(std::holds_alternative<Presentation>(parse_input_text("group\ngenerators: x\n")));
  CHECK(std::holds_alternative<FamilySpec>(
      parse_input_text("# c\nfamily\ny-generators: 1\nw: y1\nrelator 1: u = 1 ; v = y1\n")));
  CHECK_THROWS_AS(parse_input_text("nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_input("/nonexistent/file.pres"), Error);
}

TEST_CASE("format_presentation round trip") {
  const Presentation p = parse_presentation("group\ngenerators: x y\nrelator: y x y x y = y\nrelator: x^2\n");
  const std::string text = format_presentation(p);
  CHECK(text ==
        "group\n"
        "generators: x y\n"
        "order: x x^-1 y y^-1\n"
        "relator: y x y x y = y\n"
        "relator: x^2 = 1\n");
  CHECK(parse_presentation(text) == p);

  oracle::Gen gen(81);
  for (int trial = 0; trial < 200; ++trial) {
    Presentation q{Alphabet({"a", "b", "c"}, gen.coin()), {}, PresentationKind::group};
    const bool inv = q.alphabet.with_inverses();
    if (!inv) q.kind = PresentationKind::semigroup;
    for (std::size_t k = gen.below(4); k > 0; --k) {
      q.relators.push_back({gen.word(5, 3, inv), gen.word(5, 3, inv)});
    }
    if (inv && gen.coin()) {
      auto prec = q.alphabet.precedence();
      std::shuffle(prec.begin(), prec.end(), gen.engine());
      q.alphabet.set_precedence(prec);
    }
    CHECK(parse_presentation(format_presentation(q)) == q);
  }
}

TEST_CASE("format_family round trip") {
  for (const auto& spec : instances::valid_specs(82, 50)) {
    CHECK(parse_family(format_family(spec)) == spec);
  }
}

TEST_CASE("fingerprint") {
  const Presentation p = parse_presentation("group\ngenerators: x\nrelator: x^2\n");
  const std::string fp = fingerprint(p);
  CHECK(fp.size() == 16);
  CHECK(fp.find_first_not_of("0123456789abcdef") == std::string::npos);
  // Formatting differences do not matter; content does.
  CHECK(fingerprint(parse_presentation("group  # c\ngenerators:   x\nrelator: x^2 = 1\n")) == fp);
  CHECK(fingerprint(parse_presentation("group\ngenerators: x\nrelator: x^3\n")) != fp);

  // FNV-1a 64 of the canonical text, computed independently.
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : format_presentation(p)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  CHECK(fp == buf);
}
