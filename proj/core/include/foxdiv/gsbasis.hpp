#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "foxdiv/error.hpp"
#include "foxdiv/ncpoly.hpp"
#include "foxdiv/words.hpp"

namespace foxdiv {

enum class CompletionStatus { raw, completed, limit_exceeded };

std::string_view to_string(CompletionStatus status);

/// Bounds for Shirshov completion, which need not terminate.
struct CompletionLimits {
  std::size_t max_rules = 500;
  std::size_t max_steps = 100000;
  std::size_t max_degree = 24;
};

struct CompletionStats {
  /// Rewrite steps performed while reducing compositions and new rules.
  std::size_t steps = 0;
  std::size_t compositions = 0;
  /// Rules derived from compositions (input rules are not counted).
  std::size_t rules_added = 0;
  std::size_t rules_removed = 0;
  /// Which limit stopped completion (max_rules, max_steps, max_degree).
  std::string limit_hit;
};

/// Monic polynomial together with its cached leading word.
struct Rule {
  Polynomial poly;
  Word lead;
};

/// A derived rule over the integers whose leading coefficient is not a unit.
class NonMonicObstruction : public Error {
 public:
  using Error::Error;
};

/// Operation requires status == completed.
class NotCompletedError : public Error {
 public:
  using Error::Error;
};

/// Expression sum of k * a * s_i * b over a fixed list of generators s_i.
/// Certifies ideal membership; expand() replays it.
class IdealCertificate {
 public:
  using Key = std::tuple<Word, std::size_t, Word>;

  static IdealCertificate generator(std::size_t index);

  void add(const Integer& k, const Word& a, std::size_t index, const Word& b);
  IdealCertificate& operator+=(const IdealCertificate& rhs);
  IdealCertificate& operator-=(const IdealCertificate& rhs);
  IdealCertificate& operator*=(const Integer& k);
  /// Returns left * this * right.
  IdealCertificate sandwich(const Word& left, const Word& right) const;

  Polynomial expand(const std::vector<Polynomial>& generators) const;
  const std::map<Key, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::map<Key, Integer> terms_;
};

/// A monic set S over an alphabet with completion status.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  /// Sign-normalizes each polynomial (leading coefficient -1 is negated) and
  /// drops zeros. Throws NonMonicObstruction for any other leading
  /// coefficient. The result has status raw.
  RewriteSystem(Alphabet alphabet, const std::vector<Polynomial>& polys);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::vector<Polynomial> polynomials() const;
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  CompletionStatus status() const { return status_; }
  const CompletionStats& stats() const { return stats_; }

  /// Present only when completion ran with certificate tracking; entry i
  /// expresses rules()[i] over the original input polynomials.
  const std::vector<IdealCertificate>& certificates() const {
    return certificates_;
  }

 private:
  friend class Completion;

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  CompletionStatus status_ = CompletionStatus::raw;
  CompletionStats stats_;
  std::vector<IdealCertificate> certificates_;
};

/// Ambiguity word w and the composition polynomial.
struct Composition {
  Word ambiguity;
  Polynomial value;
};

/// (phi, psi)_w = phi b - a psi for LT(phi) b = a LT(psi) = w, a proper
/// overlap. Throws Error when the overlap equation fails.
Composition intersection_composition(const Polynomial& phi,
                                     const Polynomial& psi, const Word& a,
                                     const Word& b, const Alphabet& alphabet);

/// (phi, psi)_w = phi - a psi b for LT(phi) = a LT(psi) b = w.
Composition inclusion_composition(const Polynomial& phi, const Polynomial& psi,
                                  const Word& a, const Word& b,
                                  const Alphabet& alphabet);

/// One elementary rewrite: subtract coefficient * left * rule * right.
struct ReductionStep {
  Integer coefficient;
  Word left;
  std::size_t rule;
  Word right;
};

/// Normal form modulo S. Always rewrites the deg-lex greatest reducible
/// monomial using the lowest-indexed applicable rule at its leftmost
/// occurrence. Optionally records every step taken.
Polynomial reduce(const Polynomial& f, const RewriteSystem& system,
                  std::vector<ReductionStep>* trace = nullptr);

/// Reduction with a caller-chosen redex. `choose` receives the candidate
/// (monomial, rule index, position) triples for the current polynomial and
/// returns the index of the one to apply. Used to test confluence.
using RedexChooser =
    std::function<std::size_t(const std::vector<std::tuple<Word, std::size_t,
                                                            std::size_t>>&)>;
Polynomial reduce_with_strategy(const Polynomial& f,
                                const RewriteSystem& system,
                                const RedexChooser& choose);

bool is_trivial_mod(const Polynomial& f, const RewriteSystem& system);

/// Ideal membership via reduction. Throws NotCompletedError unless the
/// system is completed.
bool membership(const Polynomial& f, const RewriteSystem& system);

/// True when `w` has some rule's leading word as a subword.
bool is_reducible(const Word& w, const RewriteSystem& system);

struct CompletionOptions {
  bool track_certificates = false;
};

/// Shirshov completion with inter-reduction. Pending compositions are
/// processed in increasing deg-lex order of their ambiguity word. Returns a
/// completed system (rules sorted by leading word, ascending) or a
/// limit_exceeded system holding the partial rule set.
RewriteSystem shirshov_complete(const RewriteSystem& input,
                                const CompletionLimits& limits = {},
                                const CompletionOptions& options = {});

/// Words of length <= max_len avoiding every leading word, ascending deg-lex.
std::vector<Word> irr_enumerate(const RewriteSystem& system,
                                std::size_t max_len);

/// Every composition of the rules (all overlaps and inclusions).
std::vector<Composition> all_compositions(const RewriteSystem& system);

}  // namespace foxdiv
