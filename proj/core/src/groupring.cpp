#include "foxdiv/groupring.hpp"

#include "foxdiv/fox.hpp"

namespace foxdiv {

std::string_view to_string(PresentationKind kind) {
  return kind == PresentationKind::group ? "group" : "semigroup";
}

Presentation to_semigroup(const Presentation& p) {
  if (p.kind != PresentationKind::group) {
    throw Error("to_semigroup expects a group presentation");
  }
  Presentation out = p;
  out.kind = PresentationKind::semigroup;
  for (Generator g = 0; g < p.alphabet.generator_count(); ++g) {
    Letter x(g, false);
    out.relators.push_back({Word{x, x.inverse()}, Word{}});
    out.relators.push_back({Word{x.inverse(), x}, Word{}});
  }
  return out;
}

RewriteSystem presentation_to_rules(const Presentation& p, const Alphabet& a) {
  if (p.kind != PresentationKind::semigroup) {
    throw Error("presentation_to_rules expects a semigroup presentation");
  }
  std::vector<Polynomial> polys;
  for (const auto& rel : p.relators) {
    auto c = deglex_compare(rel.lhs, rel.rhs, a);
    if (c == 0) continue;
    const Word& greater = c > 0 ? rel.lhs : rel.rhs;
    const Word& lesser = c > 0 ? rel.rhs : rel.lhs;
    polys.push_back(Polynomial(greater) - Polynomial(lesser));
  }
  return RewriteSystem(a, polys);
}

Word normal_form(const Word& w, const RewriteSystem& system) {
  if (system.status() != CompletionStatus::completed) {
    throw NotCompletedError("normal forms need a completed rewrite system");
  }
  Polynomial r = reduce(Polynomial(w), system);
  if (r.size() != 1 || r.terms().begin()->second != 1) {
    throw Error("reduction of a word did not give a single monomial");
  }
  return r.terms().begin()->first;
}

// ---------------------------------------------------------------------------
// GroupRing

std::shared_ptr<const GroupRing> GroupRing::create(
    const Presentation& p, const CompletionLimits& limits) {
  const Presentation semigroup =
      p.kind == PresentationKind::group ? to_semigroup(p) : p;
  RewriteSystem completed =
      shirshov_complete(presentation_to_rules(semigroup, p.alphabet), limits);
  if (completed.status() != CompletionStatus::completed) {
    throw RingUnavailableError(
        "completion stopped at " + completed.stats().limit_hit + " after " +
        std::to_string(completed.size()) +
        " rules; group-ring arithmetic is unavailable");
  }
  return std::shared_ptr<const GroupRing>(
      new GroupRing(p, std::move(completed)));
}

GroupRing::GroupRing(Presentation p, RewriteSystem system)
    : presentation_(std::move(p)), system_(std::move(system)) {
  fox_images_.resize(presentation_.relators.size());
  for (std::size_t j = 0; j < presentation_.relators.size(); ++j) {
    const auto& rel = presentation_.relators[j];
    for (Generator x = 0; x < generator_count(); ++x) {
      fox_images_[j].push_back(
          foxdiv::reduce(fox_of_relator(rel.lhs, rel.rhs, x), system_));
    }
  }
}

GroupRingElement GroupRing::element(const Polynomial& p) const {
  return GroupRingElement(shared_from_this(), reduce(p));
}

GroupRingElement GroupRing::parse(std::string_view text) const {
  return element(parse_polynomial(text, alphabet()));
}

GroupRingElement GroupRing::zero() const { return element(Polynomial{}); }
GroupRingElement GroupRing::one() const { return element(Polynomial::one()); }

Word GroupRing::normal_form(const Word& w) const {
  return foxdiv::normal_form(w, system_);
}

Polynomial GroupRing::reduce(const Polynomial& p) const {
  return foxdiv::reduce(p, system_);
}

const Polynomial& GroupRing::fox_image(std::size_t relator, Generator x) const {
  return fox_images_.at(relator).at(x);
}

// ---------------------------------------------------------------------------
// GroupRingElement

GroupRingElement::GroupRingElement(std::shared_ptr<const GroupRing> ring,
                                   Polynomial value)
    : ring_(std::move(ring)), value_(std::move(value)) {}

void GroupRingElement::require_same_ring(const GroupRingElement& rhs) const {
  if (ring_ != rhs.ring_) {
    throw RingMismatchError("group-ring elements belong to different rings");
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
  require_same_ring(rhs);
  return {ring_, value_ + rhs.value_};
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
  require_same_ring(rhs);
  return {ring_, value_ - rhs.value_};
}

GroupRingElement GroupRingElement::operator-() const { return {ring_, -value_}; }

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  require_same_ring(rhs);
  return {ring_, ring_->reduce(value_ * rhs.value_)};
}

std::string to_string(const GroupRingElement& e) {
  return to_string(e.value(), e.ring().alphabet());
}

GroupRingElement ring_mul(const GroupRingElement& a,
                          const GroupRingElement& b) {
  return a * b;
}

namespace {

void require_vector(const GroupRing& ring, const ChainVector& v,
                    std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw Error(std::string(what) + ": expected " + std::to_string(expected) +
                " entries, got " + std::to_string(v.size()));
  }
  for (const auto& e : v) {
    if (&e.ring() != &ring) {
      throw RingMismatchError(std::string(what) +
                              ": entry belongs to another ring");
    }
  }
}

}  // namespace

GroupRingElement d0(const GroupRing& ring, const ChainVector& alpha) {
  require_vector(ring, alpha, ring.generator_count(), "d0");
  Polynomial sum;
  for (Generator i = 0; i < alpha.size(); ++i) {
    Polynomial x_minus_one = Polynomial(Word{Letter(i, false)}) -
                             Polynomial::one();
    sum += alpha[i].value() * x_minus_one;
  }
  return ring.element(sum);
}

ChainVector d1(const GroupRing& ring, const ChainVector& beta) {
  require_vector(ring, beta, ring.relator_count(), "d1");
  ChainVector out;
  for (Generator x = 0; x < ring.generator_count(); ++x) {
    Polynomial sum;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      sum += beta[j].value() * ring.fox_image(j, x);
    }
    out.push_back(ring.element(sum));
  }
  return out;
}

bool is_in_kernel_d1(const GroupRing& ring, const ChainVector& beta) {
  for (const auto& e : d1(ring, beta)) {
    if (!e.is_zero()) return false;
  }
  return true;
}

ChainVector unit_vector(const GroupRing& ring, std::size_t length,
                        std::size_t j) {
  ChainVector out(length, ring.zero());
  out.at(j) = ring.one();
  return out;
}

}  // namespace foxdiv
