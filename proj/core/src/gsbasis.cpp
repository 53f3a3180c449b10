#include "foxdiv/gsbasis.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <span>

namespace foxdiv {

std::string_view to_string(CompletionStatus status) {
  switch (status) {
    case CompletionStatus::raw:
      return "raw";
    case CompletionStatus::completed:
      return "completed";
    case CompletionStatus::limit_exceeded:
      return "limit_exceeded";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// IdealCertificate

IdealCertificate IdealCertificate::generator(std::size_t index) {
  IdealCertificate c;
  c.add(1, Word{}, index, Word{});
  return c;
}

void IdealCertificate::add(const Integer& k, const Word& a, std::size_t index,
                           const Word& b) {
  if (k == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, index, b}, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

IdealCertificate& IdealCertificate::operator+=(const IdealCertificate& rhs) {
  for (const auto& [key, k] : rhs.terms_) {
    add(k, std::get<0>(key), std::get<1>(key), std::get<2>(key));
  }
  return *this;
}

IdealCertificate& IdealCertificate::operator-=(const IdealCertificate& rhs) {
  for (const auto& [key, k] : rhs.terms_) {
    add(-k, std::get<0>(key), std::get<1>(key), std::get<2>(key));
  }
  return *this;
}

IdealCertificate& IdealCertificate::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coef] : terms_) coef *= k;
  return *this;
}

IdealCertificate IdealCertificate::sandwich(const Word& left,
                                            const Word& right) const {
  IdealCertificate out;
  for (const auto& [key, k] : terms_) {
    out.add(k, left * std::get<0>(key), std::get<1>(key),
            std::get<2>(key) * right);
  }
  return out;
}

Polynomial IdealCertificate::expand(
    const std::vector<Polynomial>& generators) const {
  Polynomial out;
  for (const auto& [key, k] : terms_) {
    const auto& [a, index, b] = key;
    out += foxdiv::sandwich(a, generators.at(index), b) * k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RewriteSystem

namespace {

Rule make_rule(Polynomial p, const Alphabet& a, bool* negated = nullptr) {
  auto lt = leading_term(p, a);
  if (lt.coefficient == -1) {
    p = -p;
    if (negated) *negated = true;
  } else if (lt.coefficient != 1) {
    throw NonMonicObstruction("non_monic_obstruction: leading coefficient " +
                              lt.coefficient.str() + " of " +
                              to_string(p, a));
  }
  return Rule{std::move(p), std::move(lt.monomial)};
}

}  // namespace

RewriteSystem::RewriteSystem(Alphabet alphabet,
                             const std::vector<Polynomial>& polys)
    : alphabet_(std::move(alphabet)) {
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    rules_.push_back(make_rule(p, alphabet_));
  }
}

std::vector<Polynomial> RewriteSystem::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(r.poly);
  return out;
}

// ---------------------------------------------------------------------------
// Compositions

Composition intersection_composition(const Polynomial& phi,
                                     const Polynomial& psi, const Word& a,
                                     const Word& b, const Alphabet& alphabet) {
  if (!is_monic(phi, alphabet) || !is_monic(psi, alphabet)) {
    throw Error("composition requires monic polynomials");
  }
  const Word& lphi = leading_monomial(phi, alphabet);
  const Word& lpsi = leading_monomial(psi, alphabet);
  Word w = lphi * b;
  if (w != a * lpsi || lphi.size() + lpsi.size() <= w.size()) {
    throw Error("overlap equation violated: LT(phi) b != a LT(psi) or the "
                "overlap is not proper");
  }
  return {std::move(w), sandwich(Word{}, phi, b) - sandwich(a, psi, Word{})};
}

Composition inclusion_composition(const Polynomial& phi, const Polynomial& psi,
                                  const Word& a, const Word& b,
                                  const Alphabet& alphabet) {
  if (!is_monic(phi, alphabet) || !is_monic(psi, alphabet)) {
    throw Error("composition requires monic polynomials");
  }
  const Word& lphi = leading_monomial(phi, alphabet);
  const Word& lpsi = leading_monomial(psi, alphabet);
  if (lphi != a * lpsi * b) {
    throw Error("factorization violated: LT(phi) != a LT(psi) b");
  }
  return {lphi, phi - sandwich(a, psi, b)};
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

struct Redex {
  std::size_t rule;
  std::size_t position;
};

std::optional<Redex> find_redex(const Word& m,
                                std::span<const Rule* const> rules) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (auto pos = m.find(rules[i]->lead)) return Redex{i, *pos};
  }
  return std::nullopt;
}

using WorkMap = std::map<Word, Integer, DegLexGreater>;

void apply_rewrite(WorkMap& work, const Integer& c,
                   const Rule& rule, const Word& left, const Word& right) {
  // c*m - c*left*rule*right = -c*left*tail*right for m = left*lead*right.
  for (const auto& [w, k] : rule.poly.terms()) {
    if (w == rule.lead) continue;
    Integer delta = -c * k;
    auto [it, inserted] = work.try_emplace(left * w * right, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) work.erase(it);
    }
  }
}

template <class OnStep>
Polynomial reduce_impl(const Polynomial& f, std::span<const Rule* const> rules,
                       const Alphabet& alphabet, OnStep&& on_step) {
  if (rules.empty()) return f;
  WorkMap work(DegLexGreater{&alphabet});
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);
  Polynomial out;
  auto it = work.begin();
  while (it != work.end()) {
    auto redex = find_redex(it->first, rules);
    if (!redex) {
      out.add_term(it->first, it->second);
      ++it;
      continue;
    }
    const Word m = it->first;
    const Integer c = it->second;
    work.erase(it);
    const Rule& rule = *rules[redex->rule];
    Word left = m.prefix(redex->position);
    Word right = m.suffix(m.size() - redex->position - rule.lead.size());
    on_step(c, left, redex->rule, right);
    apply_rewrite(work, c, rule, left, right);
    // Everything produced is below m; everything above m is final already.
    it = work.upper_bound(m);
  }
  return out;
}

std::vector<const Rule*> rule_pointers(const RewriteSystem& system) {
  std::vector<const Rule*> out;
  out.reserve(system.size());
  for (const auto& r : system.rules()) out.push_back(&r);
  return out;
}

}  // namespace

Polynomial reduce(const Polynomial& f, const RewriteSystem& system,
                  std::vector<ReductionStep>* trace) {
  auto rules = rule_pointers(system);
  return reduce_impl(f, rules, system.alphabet(),
                     [trace](const Integer& c, const Word& left,
                             std::size_t rule, const Word& right) {
                       if (trace) trace->push_back({c, left, rule, right});
                     });
}

Polynomial reduce_with_strategy(const Polynomial& f,
                                const RewriteSystem& system,
                                const RedexChooser& choose) {
  Polynomial current = f;
  const auto& rules = system.rules();
  for (;;) {
    std::vector<std::tuple<Word, std::size_t, std::size_t>> candidates;
    for (const auto& [m, c] : current.terms()) {
      for (std::size_t r = 0; r < rules.size(); ++r) {
        for (const auto& split : find_inclusions(m, rules[r].lead)) {
          candidates.emplace_back(m, r, split.a.size());
        }
      }
    }
    if (candidates.empty()) return current;
    const auto& [m, r, pos] = candidates.at(choose(candidates));
    const Integer c = current.coefficient(m);
    const Rule& rule = rules[r];
    Word left = m.prefix(pos);
    Word right = m.suffix(m.size() - pos - rule.lead.size());
    current -= sandwich(left, rule.poly, right) * c;
  }
}

bool is_trivial_mod(const Polynomial& f, const RewriteSystem& system) {
  return reduce(f, system).is_zero();
}

bool membership(const Polynomial& f, const RewriteSystem& system) {
  if (system.status() != CompletionStatus::completed) {
    throw NotCompletedError(
        "membership requires a completed rewrite system (status " +
        std::string(to_string(system.status())) + ")");
  }
  return is_trivial_mod(f, system);
}

bool is_reducible(const Word& w, const RewriteSystem& system) {
  return std::any_of(system.rules().begin(), system.rules().end(),
                     [&w](const Rule& r) { return w.contains(r.lead); });
}

// ---------------------------------------------------------------------------
// Completion

class Completion {
 public:
  Completion(const RewriteSystem& input, const CompletionLimits& limits,
             const CompletionOptions& options)
      : alphabet_(input.alphabet()),
        limits_(limits),
        track_(options.track_certificates),
        queue_(PendingLess{&alphabet_}) {
    const auto& rules = input.rules();
    for (std::size_t k = 0; k < rules.size(); ++k) {
      to_add_.push_back(
          {rules[k].poly,
           track_ ? IdealCertificate::generator(k) : IdealCertificate{}});
    }
  }

  RewriteSystem run() {
    RewriteSystem out;
    out.alphabet_ = alphabet_;
    try {
      for (;;) {
        drain_additions();
        while (!queue_.empty()) {
          Pending p = *queue_.begin();
          queue_.erase(queue_.begin());
          if (!slots_[p.phi].alive || !slots_[p.psi].alive) continue;
          process(p);
          drain_additions();
        }
        if (!verify_all()) continue;
        break;
      }
      out.status_ = CompletionStatus::completed;
    } catch (const LimitHit& hit) {
      stats_.limit_hit = hit.which;
      out.status_ = CompletionStatus::limit_exceeded;
    }

    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (slots_[i].alive) alive.push_back(i);
    }
    std::sort(alive.begin(), alive.end(), [this](std::size_t x, std::size_t y) {
      return deglex_compare(slots_[x].rule.lead, slots_[y].rule.lead,
                            alphabet_) < 0;
    });
    for (std::size_t i : alive) {
      out.rules_.push_back(slots_[i].rule);
      if (track_) out.certificates_.push_back(slots_[i].cert);
    }
    out.stats_ = stats_;
    return out;
  }

 private:
  struct LimitHit {
    std::string which;
  };

  struct Slot {
    Rule rule;
    IdealCertificate cert;
    bool alive = true;
  };

  /// LT(slots[phi]) * b == a * LT(slots[psi]) == w.
  struct Pending {
    Word w;
    std::size_t phi;
    std::size_t psi;
    Word a;
    Word b;
  };

  struct PendingLess {
    const Alphabet* alphabet;
    bool operator()(const Pending& x, const Pending& y) const {
      if (auto c = deglex_compare(x.w, y.w, *alphabet); c != 0) return c < 0;
      if (x.phi != y.phi) return x.phi < y.phi;
      if (x.psi != y.psi) return x.psi < y.psi;
      return x.a.size() < y.a.size();
    }
  };

  struct Addition {
    Polynomial poly;
    IdealCertificate cert;
    /// Came from a composition rather than the input or a requeued rule.
    bool derived = false;
  };

  void count_step() {
    if (++stats_.steps > limits_.max_steps) throw LimitHit{"max_steps"};
  }

  std::vector<const Rule*> alive_rules(std::vector<std::size_t>& ids,
                                       std::size_t skip) const {
    std::vector<const Rule*> out;
    ids.clear();
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (!slots_[i].alive || i == skip) continue;
      out.push_back(&slots_[i].rule);
      ids.push_back(i);
    }
    return out;
  }

  Polynomial reduce_tracked(const Polynomial& p, IdealCertificate& cert,
                            std::size_t skip = static_cast<std::size_t>(-1)) {
    std::vector<std::size_t> ids;
    auto rules = alive_rules(ids, skip);
    return reduce_impl(p, rules, alphabet_,
                       [&](const Integer& c, const Word& left,
                           std::size_t rule, const Word& right) {
                         count_step();
                         if (track_) {
                           auto term = slots_[ids[rule]].cert.sandwich(left,
                                                                       right);
                           term *= c;
                           cert -= term;
                         }
                       });
  }

  void drain_additions() {
    while (!to_add_.empty()) {
      Addition next = std::move(to_add_.front());
      to_add_.pop_front();
      Polynomial p = reduce_tracked(next.poly, next.cert);
      if (p.is_zero()) continue;
      bool negated = false;
      Rule rule = make_rule(std::move(p), alphabet_, &negated);
      if (negated) next.cert *= -1;
      insert(std::move(rule), std::move(next.cert), next.derived);
    }
  }

  void insert(Rule rule, IdealCertificate cert, bool derived) {
    if (rule.lead.size() > limits_.max_degree) throw LimitHit{"max_degree"};
    const std::size_t id = slots_.size();
    slots_.push_back({std::move(rule), std::move(cert), true});
    if (derived) ++stats_.rules_added;

    // Rules whose leading word contains the new one go back to the queue.
    for (std::size_t t = 0; t < id; ++t) {
      if (!slots_[t].alive) continue;
      if (slots_[t].rule.lead.contains(slots_[id].rule.lead)) {
        slots_[t].alive = false;
        ++stats_.rules_removed;
        to_add_.push_back({slots_[t].rule.poly, slots_[t].cert});
      }
    }
    // Inter-reduce the tails of the survivors.
    for (std::size_t t = 0; t < id; ++t) {
      if (!slots_[t].alive) continue;
      Slot& slot = slots_[t];
      Polynomial tail = slot.rule.poly;
      tail.add_term(slot.rule.lead, -1);
      bool touched = std::any_of(
          tail.terms().begin(), tail.terms().end(),
          [&](const auto& term) {
            return term.first.contains(slots_[id].rule.lead);
          });
      if (!touched) continue;
      IdealCertificate cert = slot.cert;
      Polynomial reduced = reduce_tracked(tail, cert, t);
      reduced.add_term(slot.rule.lead, 1);
      slot.rule.poly = std::move(reduced);
      slot.cert = std::move(cert);
    }

    std::size_t alive = 0;
    for (const auto& s : slots_) alive += s.alive ? 1 : 0;
    if (alive > limits_.max_rules) throw LimitHit{"max_rules"};

    for (std::size_t t = 0; t <= id; ++t) {
      if (!slots_[t].alive) continue;
      enqueue_overlaps(id, t);
      if (t != id) enqueue_overlaps(t, id);
    }
  }

  void enqueue_overlaps(std::size_t phi, std::size_t psi) {
    const Word& u = slots_[phi].rule.lead;
    const Word& v = slots_[psi].rule.lead;
    for (auto& split : find_intersection_overlaps(u, v)) {
      queue_.insert(Pending{u * split.b, phi, psi, std::move(split.a),
                            std::move(split.b)});
    }
  }

  void process(const Pending& p) {
    ++stats_.compositions;
    const Slot& phi = slots_[p.phi];
    const Slot& psi = slots_[p.psi];
    Polynomial c =
        sandwich(Word{}, phi.rule.poly, p.b) - sandwich(p.a, psi.rule.poly, {});
    IdealCertificate cert;
    if (track_) {
      cert = phi.cert.sandwich(Word{}, p.b);
      cert -= psi.cert.sandwich(p.a, Word{});
    }
    to_add_.push_back({std::move(c), std::move(cert), true});
  }

  /// Re-checks every composition of the surviving rules; queues any that do
  /// not reduce to zero. Returns true when all are trivial.
  bool verify_all() {
    bool clean = true;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (!slots_[i].alive) continue;
      for (std::size_t j = 0; j < slots_.size(); ++j) {
        if (!slots_[j].alive) continue;
        const Word& u = slots_[i].rule.lead;
        const Word& v = slots_[j].rule.lead;
        for (const auto& split : find_intersection_overlaps(u, v)) {
          Pending p{u * split.b, i, j, split.a, split.b};
          Polynomial c = sandwich(Word{}, slots_[i].rule.poly, p.b) -
                         sandwich(p.a, slots_[j].rule.poly, {});
          IdealCertificate scratch;
          if (!reduce_tracked(c, scratch).is_zero()) {
            clean = false;
            process(p);
          }
        }
        if (i != j && !find_inclusions(u, v).empty()) {
          // Inter-reduction should make this impossible; fall back to
          // re-adding the larger rule.
          clean = false;
          slots_[i].alive = false;
          to_add_.push_back({slots_[i].rule.poly, slots_[i].cert});
          break;
        }
      }
    }
    return clean;
  }

  Alphabet alphabet_;
  CompletionLimits limits_;
  bool track_;
  std::vector<Slot> slots_;
  std::set<Pending, PendingLess> queue_;
  std::deque<Addition> to_add_;
  CompletionStats stats_;
};

RewriteSystem shirshov_complete(const RewriteSystem& input,
                                const CompletionLimits& limits,
                                const CompletionOptions& options) {
  return Completion(input, limits, options).run();
}

std::vector<Word> irr_enumerate(const RewriteSystem& system,
                                std::size_t max_len) {
  const auto& rules = system.rules();
  if (std::any_of(rules.begin(), rules.end(),
                  [](const Rule& r) { return r.lead.empty(); })) {
    return {};
  }
  const auto letters = system.alphabet().letters_ascending();
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Letter l : letters) {
        Word candidate = w;
        candidate.push_back(l);
        // The prefix is irreducible, so a new occurrence must be a suffix.
        bool reducible = std::any_of(
            rules.begin(), rules.end(),
            [&candidate](const Rule& r) { return candidate.ends_with(r.lead); });
        if (!reducible) next.push_back(std::move(candidate));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Composition> all_compositions(const RewriteSystem& system) {
  std::vector<Composition> out;
  const auto& rules = system.rules();
  const auto& a = system.alphabet();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      for (const auto& s : find_intersection_overlaps(rules[i].lead,
                                                      rules[j].lead)) {
        out.push_back(
            intersection_composition(rules[i].poly, rules[j].poly, s.a, s.b, a));
      }
      if (i == j) continue;
      for (const auto& s : find_inclusions(rules[i].lead, rules[j].lead)) {
        out.push_back(
            inclusion_composition(rules[i].poly, rules[j].poly, s.a, s.b, a));
      }
    }
  }
  return out;
}

}  // namespace foxdiv
