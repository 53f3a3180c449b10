#include <benchmark/benchmark.h>

#include <random>

#include "foxdiv/foxdiv.hpp"

using namespace foxdiv;

namespace {

Presentation cyclic(int n) {
  return parse_presentation("group\ngenerators: g\nrelator: g^" + std::to_string(n) + "\n");
}

Word random_word(std::mt19937_64& rng, std::size_t len, Generator gens) {
  std::uniform_int_distribution<Generator> g(0, gens - 1);
  std::bernoulli_distribution inv(0.5);
  Word w;
  while (w.size() < len) {
    const Letter l(g(rng), inv(rng));
    if (!w.empty() && w.back() == l.inverse()) continue;
    w.push_back(l);
  }
  return w;
}

void BM_CompleteCyclic(benchmark::State& state) {
  const Presentation p = cyclic(static_cast<int>(state.range(0)));
  const RewriteSystem input = presentation_to_rules(to_semigroup(p), p.alphabet);
  for (auto _ : state) benchmark::DoNotOptimize(shirshov_complete(input));
}
BENCHMARK(BM_CompleteCyclic)->Arg(5)->Arg(12)->Arg(20);

void BM_CompleteYxyxy(benchmark::State& state) {
  const Presentation p = parse_presentation("group\ngenerators: x y\nrelator: y x y x y = y\n");
  const RewriteSystem input = presentation_to_rules(to_semigroup(p), p.alphabet);
  for (auto _ : state) benchmark::DoNotOptimize(shirshov_complete(input));
}
BENCHMARK(BM_CompleteYxyxy);

void BM_ReduceFreeGroup(benchmark::State& state) {
  const Alphabet a({"x", "y", "z"}, true);
  const RewriteSystem fg =
      shirshov_complete(presentation_to_rules(to_semigroup(Presentation{a, {}, PresentationKind::group}), a));
  std::mt19937_64 rng(7);
  // Unreduced products of reduced words so that cancellation does real work.
  Polynomial p;
  for (int k = 0; k < 32; ++k) {
    const Word u = random_word(rng, static_cast<std::size_t>(state.range(0)), 3);
    p.add_term(u * u.inverse() * random_word(rng, 4, 3), k % 3 - 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(reduce(p, fg));
}
BENCHMARK(BM_ReduceFreeGroup)->Arg(8)->Arg(32);

void BM_FoxDerivative(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const Word w = random_word(rng, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(fox_derivative(w, 0));
}
BENCHMARK(BM_FoxDerivative)->Arg(16)->Arg(256);

void BM_SearchKernel(benchmark::State& state) {
  const auto ring = GroupRing::create(cyclic(static_cast<int>(state.range(0))));
  KernelSearchOptions o;
  o.support_len = 1;
  o.coeff_bound = 1;
  o.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_kernel(*ring, o));
}
BENCHMARK(BM_SearchKernel)->Args({3, 1})->Args({5, 1})->Args({5, 4});

}  // namespace

BENCHMARK_MAIN();
