#include <doctest.h>

#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace foxdiv;
using helpers::P;
using helpers::W;

namespace {

/// Completed free-group system {g g^-1 - 1, g^-1 g - 1 : g}.
RewriteSystem free_group(const Alphabet& a) {
  Presentation p{a, {}, PresentationKind::group};
  return shirshov_complete(presentation_to_rules(to_semigroup(p), a));
}

}  // namespace

TEST_CASE("fox_derivative examples") {
  const Alphabet a({"x", "y"}, true);
  CHECK(fox_derivative(W("x", a), 0) == Polynomial::one());
  CHECK(fox_derivative(W("y", a), 0).is_zero());
  CHECK(fox_derivative(W("x^3", a), 0) == P("1 + x + x^2", a));
  CHECK(fox_derivative(W("x^-2", a), 0) == P("-x^-1 - x^-2", a));
  CHECK(fox_derivative(W("x^-1", a), 0) == P("-x^-1", a));
  const Word r = W("y x y x y", a);
  CHECK(fox_derivative(r, 0) == oracle::polynomial(oracle::fox(oracle::letters(r), 1)));
  CHECK(fox_derivative(r, 0) == P("y + y x y", a));
  CHECK(fox_derivative(Word{}, 0).is_zero());
}

TEST_CASE("fox_power") {
  const Alphabet a({"x"}, true);
  CHECK(fox_power(0, 0).is_zero());
  CHECK(fox_power(2, 0) == P("1 + x", a));
  CHECK(fox_power(-1, 0) == P("-x^-1", a));
  for (long n = -6; n <= 6; ++n) {
    const Word xn = Word::power(Letter(0, n < 0), static_cast<std::size_t>(n < 0 ? -n : n));
    CHECK(fox_power(n, 0) == fox_derivative(xn, 0));
  }
}

TEST_CASE("fox_of_relator") {
  const Alphabet a({"x", "y"}, true);
  CHECK(fox_of_relator(W("y x y x y", a), W("y", a), 0) == P("y + y x y", a));
  CHECK(fox_of_relator(W("x y x", a), W("x y x", a), 0).is_zero());
  CHECK(fox_of_relator(W("x^2", a), Word{}, 0) == P("1 + x", a));
}

TEST_CASE("fox_derivative agrees with the closed-form oracle") {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = gen.letters(10, 3, true);
    for (int x = 1; x <= 3; ++x) {
      CHECK(oracle::poly(fox_derivative(oracle::word(w), static_cast<Generator>(x - 1))) ==
            oracle::fox(w, x));
    }
  }
}

TEST_CASE("product rule") {
  oracle::Gen gen(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word u = gen.word(8, 3, true);
    const Word v = gen.word(8, 3, true);
    for (Generator x = 0; x < 3; ++x) {
      CHECK(fox_derivative(u * v, x) ==
            fox_derivative(u, x) + Polynomial(u) * fox_derivative(v, x));
    }
  }
}

TEST_CASE("fundamental identity modulo the free group") {
  const Alphabet a = helpers::xyz();
  const RewriteSystem fg = free_group(a);
  REQUIRE(fg.status() == CompletionStatus::completed);
  oracle::Gen gen(43);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = oracle::word(gen.reduced_letters(10, 3));
    Polynomial sum;
    for (Generator x = 0; x < 3; ++x) {
      sum += fox_derivative(w, x) * (Polynomial(Word{Letter(x, false)}) - Polynomial::one());
    }
    CHECK(reduce(sum - (Polynomial(w) - Polynomial::one()), fg).is_zero());
  }
}

TEST_CASE("telescoping sum over x-free segments") {
  oracle::Gen gen(44);
  const Letter x(0, false);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = gen.below(4);
    Word w;
    Polynomial expected;
    for (std::size_t j = 0; j < m; ++j) {
      // Segment over y, z only.
      Word seg;
      for (int k = static_cast<int>(gen.below(3)); k > 0; --k) {
        seg.push_back(Letter(static_cast<Generator>(1 + gen.below(2)), gen.coin()));
      }
      w *= seg;
      long n = static_cast<long>(gen.range(-3, 3));
      expected += Polynomial(w) * fox_power(n, 0);
      w *= Word::power(n < 0 ? x.inverse() : x, static_cast<std::size_t>(n < 0 ? -n : n));
    }
    if (gen.coin()) w.push_back(Letter(1, false));
    CHECK(fox_derivative(w, 0) == expected);
  }
}
