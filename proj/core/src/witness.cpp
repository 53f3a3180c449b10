#include "foxdiv/witness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <thread>

#include "foxdiv/fox.hpp"

namespace foxdiv {

WitnessReport verify_witness(const GroupRing& ring, const ChainVector& beta,
                             const std::vector<Polynomial>& D,
                             const Polynomial& f) {
  if (D.size() != ring.relator_count()) {
    throw Error("verify_witness: expected " +
                std::to_string(ring.relator_count()) + " D entries, got " +
                std::to_string(D.size()));
  }
  if (!is_in_kernel_d1(ring, beta)) {
    throw NotInKernelError("beta is not in the kernel of d1");
  }
  Polynomial a;
  for (std::size_t j = 0; j < beta.size(); ++j) a += beta[j].value() * D[j];
  WitnessReport report{beta, D, f, ring.element(a), ring.element(f)};
  report.product_zero = (report.A * report.B).is_zero();
  report.nontrivial = !report.A.is_zero() && !report.B.is_zero();
  return report;
}

WitnessReport verify_witness(const GroupRing& ring, const ChainVector& beta,
                             const FactorizationReport& factors) {
  return verify_witness(ring, beta, factors.D, factors.f);
}

namespace {

long long digit_value(unsigned digit) {
  const long long half = static_cast<long long>((digit + 1) / 2);
  return digit % 2 == 1 ? half : -half;
}

long long to_small(const Integer& c) {
  if (c > std::numeric_limits<long long>::max() / 4 ||
      c < std::numeric_limits<long long>::min() / 4) {
    throw SearchLimitError("search_kernel: coefficient too large");
  }
  return static_cast<long long>(c);
}

/// d1 of each basis vector (word k in entry j) as a dense integer vector
/// over every monomial that occurs in any image.
struct BasisImages {
  std::vector<std::vector<long long>> columns;
  std::size_t dimension = 0;
};

BasisImages basis_images(const GroupRing& ring, const std::vector<Word>& basis) {
  std::vector<std::vector<std::pair<std::size_t, Integer>>> sparse;
  std::map<std::pair<Generator, Word>, std::size_t> index;
  for (std::size_t j = 0; j < ring.relator_count(); ++j) {
    for (const Word& w : basis) {
      auto& entries = sparse.emplace_back();
      for (Generator x = 0; x < ring.generator_count(); ++x) {
        const Polynomial image =
            ring.reduce(Polynomial(w) * ring.fox_image(j, x));
        for (const auto& [m, c] : image.terms()) {
          auto [it, inserted] = index.try_emplace({x, m}, index.size());
          entries.emplace_back(it->second, c);
        }
      }
    }
  }
  BasisImages out;
  out.dimension = index.size();
  for (const auto& column : sparse) {
    std::vector<long long> dense(out.dimension, 0);
    for (const auto& [slot, c] : column) dense[slot] = to_small(c);
    out.columns.push_back(std::move(dense));
  }
  return out;
}

/// Enumerates candidates whose most significant digit lies in [top_lo,
/// top_hi) and returns the digit vectors of kernel members in order.
std::vector<std::vector<unsigned>> scan(const BasisImages& images,
                                        std::size_t positions, unsigned radix,
                                        unsigned top_lo, unsigned top_hi) {
  std::vector<std::vector<unsigned>> found;
  if (positions == 0 || top_lo >= top_hi) return found;
  std::vector<unsigned> digits(positions, 0);
  std::vector<long long> acc(images.dimension, 0);
  std::size_t nonzero = 0;

  auto shift = [&](std::size_t p, unsigned from, unsigned to) {
    const long long delta = digit_value(to) - digit_value(from);
    if (delta == 0) return;
    const auto& column = images.columns[p];
    for (std::size_t r = 0; r < acc.size(); ++r) {
      if (column[r] == 0) continue;
      const bool was_zero = acc[r] == 0;
      acc[r] += delta * column[r];
      const bool is_zero = acc[r] == 0;
      if (was_zero && !is_zero) ++nonzero;
      if (!was_zero && is_zero) --nonzero;
    }
  };

  const std::size_t top = positions - 1;
  shift(top, 0, top_lo);
  digits[top] = top_lo;
  while (true) {
    const bool all_zero =
        std::all_of(digits.begin(), digits.end(), [](unsigned d) { return d == 0; });
    if (!all_zero && nonzero == 0) found.push_back(digits);
    std::size_t p = 0;
    while (p < top && digits[p] + 1 == radix) {
      shift(p, digits[p], 0);
      digits[p] = 0;
      ++p;
    }
    if (p == top) {
      if (digits[top] + 1 >= top_hi) break;
    }
    shift(p, digits[p], digits[p] + 1);
    ++digits[p];
  }
  return found;
}

}  // namespace

std::vector<ChainVector> search_kernel(const GroupRing& ring,
                                       const KernelSearchOptions& options) {
  std::vector<ChainVector> out;
  const std::size_t m = ring.relator_count();
  if (m == 0) return out;
  const std::vector<Word> basis = irr_enumerate(ring.system(), options.support_len);
  const std::size_t positions = m * basis.size();
  if (positions == 0) return out;
  const unsigned radix = 2 * options.coeff_bound + 1;

  std::size_t total = 1;
  for (std::size_t p = 0; p < positions; ++p) {
    if (total > options.max_candidates / radix) {
      throw SearchLimitError("search_kernel: more than " +
                             std::to_string(options.max_candidates) +
                             " candidates");
    }
    total *= radix;
  }

  const BasisImages images = basis_images(ring, basis);
  const unsigned workers =
      std::clamp<unsigned>(options.threads, 1, radix);
  std::vector<std::vector<std::vector<unsigned>>> parts(workers);
  auto run = [&](unsigned w) {
    const unsigned lo = radix * w / workers;
    const unsigned hi = radix * (w + 1) / workers;
    parts[w] = scan(images, positions, radix, lo, hi);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  // Each part holds one contiguous range of the top digit, and within a part
  // candidates are in increasing enumeration index; merge by that index.
  std::vector<std::vector<unsigned>> found;
  for (auto& part : parts) {
    for (auto& digits : part) found.push_back(std::move(digits));
  }
  auto index_less = [](const std::vector<unsigned>& a,
                       const std::vector<unsigned>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
  };
  std::sort(found.begin(), found.end(), index_less);

  for (const auto& digits : found) {
    ChainVector beta;
    for (std::size_t j = 0; j < m; ++j) {
      Polynomial entry;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        entry.add_term(basis[k], digit_value(digits[j * basis.size() + k]));
      }
      beta.push_back(ring.element(entry));
    }
    out.push_back(std::move(beta));
  }
  return out;
}

bool torsion_identity_check(long n) {
  if (n < 2) throw Error("torsion_identity_check needs n >= 2");
  Presentation p{Alphabet({"g"}, true), {}, PresentationKind::group};
  const Letter g(0, false);
  p.relators.push_back({Word::power(g, static_cast<std::size_t>(n)), Word{}});
  const auto ring = GroupRing::create(p);
  const auto a = ring->parse("1 - g");
  Polynomial sum;
  for (long k = 0; k < n; ++k) {
    sum.add_term(Word::power(g, static_cast<std::size_t>(k)), 1);
  }
  const auto b = ring->element(sum);
  return (a * b).is_zero() && !a.is_zero() && !b.is_zero();
}

FactorizationReport common_right_divisor(const Presentation& p, Generator x) {
  const Alphabet& a = p.alphabet;
  std::vector<Polynomial> derivatives;
  for (const auto& rel : p.relators) {
    derivatives.push_back(fox_of_relator(rel.lhs, rel.rhs, x));
  }

  auto divide_all = [&](const Polynomial& f) -> std::optional<std::vector<Polynomial>> {
    std::vector<Polynomial> D;
    for (const auto& d : derivatives) {
      auto q = right_divide(d, f, a);
      if (!q) return std::nullopt;
      D.push_back(std::move(*q));
    }
    return D;
  };

  FactorizationReport best;
  best.generator = x;
  best.f = Polynomial::one();
  best.D = derivatives;
  bool have_candidate = false;
  for (const auto& d : derivatives) {
    if (d.is_zero()) continue;
    Polynomial f = d;
    const auto lt = leading_term(f, a);
    if (lt.coefficient == -1) f = -f;
    else if (lt.coefficient != 1) continue;
    if (have_candidate &&
        deglex_compare(leading_monomial(f, a), leading_monomial(best.f, a), a) <= 0) {
      continue;
    }
    if (auto D = divide_all(f)) {
      best.f = std::move(f);
      best.D = std::move(*D);
      have_candidate = true;
    }
  }
  best.exact = true;
  for (std::size_t j = 0; j < derivatives.size(); ++j) {
    if (best.D[j] * best.f != derivatives[j]) best.exact = false;
  }
  return best;
}

}  // namespace foxdiv
