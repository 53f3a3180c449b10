#include <doctest.h>

#include <map>

#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace foxdiv;
using helpers::P;
using helpers::W;

namespace {

/// <x | x^2> with x^-1 > x so that the normal forms are 1 and x.
Presentation x2() {
  return helpers::group("group\ngenerators: x\norder: x^-1 x\nrelator: x^2\n");
}

/// Presentations used for the chain identity.
std::vector<Presentation> desk_presentations() {
  std::vector<Presentation> out;
  out.push_back(helpers::group("group\ngenerators: x\n"));
  out.push_back(helpers::group("group\ngenerators: x y\n"));
  for (int n = 2; n <= 6; ++n) out.push_back(helpers::cyclic(n));
  out.push_back(helpers::group("group\ngenerators: x y\nrelator: y x y x y = y\n"));
  out.push_back(helpers::group("group\ngenerators: x y\nrelator: x y x^-1 y^-1\n"));
  out.push_back(
      helpers::group("semigroup\ngenerators: x y\nrelator: x^2 = y^2\nrelator: x y^2 = y^2 x\n"));
  return out;
}

}  // namespace

TEST_CASE("to_semigroup") {
  const Presentation s = to_semigroup(x2());
  CHECK(s.kind == PresentationKind::semigroup);
  REQUIRE(s.relators.size() == 3);
  const Alphabet& a = s.alphabet;
  CHECK(s.relators[0] == Relation{W("x^2", a), Word{}});
  CHECK(s.relators[1] == Relation{W("x x^-1", a), Word{}});
  CHECK(s.relators[2] == Relation{W("x^-1 x", a), Word{}});
  CHECK(to_semigroup(helpers::group("group\ngenerators: x\n")).relators.size() == 2);
  CHECK(to_semigroup(helpers::group("group\ngenerators: x y\nrelator: x y = y x\n"))
            .relators.size() == 5);
  CHECK_THROWS_AS(to_semigroup(to_semigroup(x2())), Error);
}

TEST_CASE("presentation_to_rules") {
  const Alphabet a = helpers::xy();
  Presentation p{a, {{W("x^2", a), W("y^2", a)}}, PresentationKind::semigroup};
  RewriteSystem r = presentation_to_rules(p, a);
  REQUIRE(r.size() == 1);
  CHECK(r.rules()[0].poly == P("x^2 - y^2", a));

  p.relators = {{W("y^2", a), W("x^2", a)}};
  CHECK(presentation_to_rules(p, a).rules()[0].poly == P("x^2 - y^2", a));

  p.relators = {{W("x y", a), W("x y", a)}};
  CHECK(presentation_to_rules(p, a).empty());

  const Alphabet g({"x"}, true);
  Presentation q{g, {{W("x x^-1", g), Word{}}}, PresentationKind::semigroup};
  CHECK(presentation_to_rules(q, g).rules()[0].poly == P("x x^-1 - 1", g));
}

TEST_CASE("normal_form") {
  const auto c5 = GroupRing::create(helpers::cyclic(5));
  const Alphabet& a = c5->alphabet();
  CHECK(c5->normal_form(W("g^4 g^3", a)) == c5->normal_form(W("g^2", a)));
  CHECK(c5->normal_form(W("g^2", a)) == W("g^2", a));
  CHECK(c5->normal_form(W("g^4", a)) == W("g^-1", a));

  const auto fg = GroupRing::create(helpers::group("group\ngenerators: x y\n"));
  CHECK(fg->normal_form(W("x x^-1", fg->alphabet())).empty());
  CHECK(fg->normal_form(W("y x y^-1", fg->alphabet())) == W("y x y^-1", fg->alphabet()));

  const RewriteSystem raw = presentation_to_rules(to_semigroup(x2()), x2().alphabet);
  CHECK_THROWS_AS(normal_form(Word{}, raw), NotCompletedError);
}

TEST_CASE("ring_mul") {
  const auto c5 = GroupRing::create(helpers::cyclic(5));
  CHECK(ring_mul(c5->parse("1 - g"), c5->parse("1 + g + g^2 + g^3 + g^4")).is_zero());
  const auto a = c5->parse("2*g - g^3 + 1");
  CHECK(ring_mul(a, c5->one()) == a);
  CHECK(ring_mul(c5->one(), a) == a);

  const auto r = GroupRing::create(x2());
  CHECK(ring_mul(r->parse("1 - x"), r->parse("1 + x")).is_zero());
  CHECK(ring_mul(r->parse("x"), r->parse("x")) == r->one());

  CHECK_THROWS_AS(ring_mul(a, r->one()), RingMismatchError);
  CHECK_THROWS_AS((void)(a + r->one()), RingMismatchError);
}

TEST_CASE("d0") {
  const auto r = GroupRing::create(x2());
  CHECK(d0(*r, {r->one()}) == r->parse("x - 1"));
  CHECK(d0(*r, {r->zero()}).is_zero());
  CHECK(d0(*r, {r->parse("1 + x")}).is_zero());
  CHECK_THROWS_AS(d0(*r, {}), Error);
}

TEST_CASE("d1 and the kernel") {
  const auto r = GroupRing::create(x2());
  CHECK(r->fox_image(0, 0) == P("1 + x", r->alphabet()));
  auto image = d1(*r, {r->one()});
  REQUIRE(image.size() == 1);
  CHECK(image[0] == r->parse("1 + x"));
  CHECK(d1(*r, {r->zero()})[0].is_zero());
  CHECK(d1(*r, {r->parse("1 - x")})[0].is_zero());
  CHECK(is_in_kernel_d1(*r, {r->parse("1 - x")}));
  CHECK(is_in_kernel_d1(*r, {r->zero()}));
  CHECK_FALSE(is_in_kernel_d1(*r, {r->one()}));
  CHECK_THROWS_AS(d1(*r, {r->one(), r->one()}), Error);
}

TEST_CASE("d1 multiplies beta on the left") {
  // <x, y | x y x^-1 y^-1>: J_x = 1 - x y x^-1, so (y) J_x and J_x (y) differ.
  const auto r = GroupRing::create(helpers::group("group\ngenerators: x y\nrelator: x y x^-1 y^-1\n"));
  const auto beta = r->parse("y");
  const auto left = d1(*r, {beta})[0];
  CHECK(left == ring_mul(beta, r->element(r->fox_image(0, 0))));
}

TEST_CASE("ring is unavailable when completion hits a limit") {
  CompletionLimits tight;
  tight.max_rules = 3;
  CHECK_THROWS_AS(
      GroupRing::create(helpers::group("group\ngenerators: a b\nrelator: a b a = b a b\n"), tight),
      RingUnavailableError);
}

TEST_CASE("chain identity on unit vectors") {
  for (const auto& p : desk_presentations()) {
    const auto ring = GroupRing::create(p);
    for (std::size_t j = 0; j < ring->relator_count(); ++j) {
      const auto e = unit_vector(*ring, ring->relator_count(), j);
      CHECK(d0(*ring, d1(*ring, e)).is_zero());
    }
  }
}

TEST_CASE("relator pair derivative matches the single word r1 r2^-1") {
  for (const auto& p : desk_presentations()) {
    if (p.kind != PresentationKind::group) continue;
    const auto ring = GroupRing::create(p);
    for (std::size_t j = 0; j < ring->relator_count(); ++j) {
      const auto& rel = p.relators[j];
      for (Generator x = 0; x < ring->generator_count(); ++x) {
        CHECK(ring->reduce(fox_derivative(rel.lhs * rel.rhs.inverse(), x)) ==
              ring->fox_image(j, x));
      }
    }
  }
}

TEST_CASE("normal-form soundness") {
  oracle::Gen gen(51);
  const auto ring = GroupRing::create(helpers::group("group\ngenerators: x y\nrelator: y x y x y = y\n"));
  std::map<Word, std::vector<Word>> classes;
  for (int trial = 0; trial < 400; ++trial) {
    const Word w = gen.word(6, 2, true);
    classes[ring->normal_form(w)].push_back(w);
  }
  for (const auto& [nf, words] : classes) {
    for (const Word& w : words) CHECK(ring->reduce(Polynomial(w) - Polynomial(words.front())).is_zero());
  }
  // Ideal members a s b vanish.
  const auto& relators = ring->presentation().relators;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& rel = relators[0];
    const Word l = gen.word(4, 2, true);
    const Word r = gen.word(4, 2, true);
    CHECK(ring->reduce(sandwich(l, Polynomial(rel.lhs) - Polynomial(rel.rhs), r)).is_zero());
    const Letter g(static_cast<Generator>(gen.below(2)), gen.coin());
    CHECK(ring->reduce(sandwich(l, Polynomial(Word{g, g.inverse()}) - Polynomial::one(), r)).is_zero());
  }
  CHECK(classes.size() > 1);
}

TEST_CASE("semigroup-relation systems send words to words") {
  const std::vector<Presentation> ps = desk_presentations();
  for (const auto& p : ps) {
    const auto ring = GroupRing::create(p);
    const Alphabet& a = ring->alphabet();
    const std::size_t letters = a.precedence().size();
    // Every word of length <= 4.
    std::vector<Word> frontier{Word{}};
    for (int len = 0; len < 4; ++len) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (std::size_t k = 0; k < letters; ++k) {
          Word v = w;
          v.push_back(a.precedence()[k]);
          const Polynomial r = ring->reduce(Polynomial(v));
          REQUIRE(r.size() == 1);
          CHECK(r.terms().begin()->second == 1);
          CHECK_FALSE(is_reducible(r.terms().begin()->first, ring->system()));
          next.push_back(std::move(v));
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("ring_mul is associative and unital") {
  oracle::Gen gen(52);
  for (const auto& p : desk_presentations()) {
    const auto ring = GroupRing::create(p);
    const int g = static_cast<int>(ring->generator_count());
    const bool inv = p.kind == PresentationKind::group;
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = ring->element(gen.polynomial(3, 3, g, inv));
      const auto b = ring->element(gen.polynomial(3, 3, g, inv));
      const auto c = ring->element(gen.polynomial(3, 3, g, inv));
      CHECK(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
      CHECK(ring_mul(a, ring->one()) == a);
      CHECK(ring_mul(ring->one(), a) == a);
      const auto ab = ring_mul(a, b);
      for (const auto& [w, k] : ab.value().terms()) {
        CHECK_FALSE(is_reducible(w, ring->system()));
      }
    }
  }
}
