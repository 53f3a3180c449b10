#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "foxdiv/error.hpp"
#include "foxdiv/gsbasis.hpp"
#include "foxdiv/ncpoly.hpp"
#include "foxdiv/words.hpp"

namespace foxdiv {

enum class PresentationKind { group, semigroup };

std::string_view to_string(PresentationKind kind);

/// One defining relation lhs = rhs (a group relator r is r = 1).
struct Relation {
  Word lhs;
  Word rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Generators and relations. For kind == group the alphabet carries the
/// inverse letters; for kind == semigroup it does not.
struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relators;
  PresentationKind kind = PresentationKind::group;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Adds x x^-1 = 1 and x^-1 x = 1 for every generator and marks the result
/// as a semigroup presentation over X u X^-1.
Presentation to_semigroup(const Presentation& p);

/// One monic rule (greater side) - (lesser side) per relation under the
/// deg-lex order of `a`; relations with identical sides are dropped.
RewriteSystem presentation_to_rules(const Presentation& p, const Alphabet& a);

/// Irreducible representative of `w`. Throws NotCompletedError unless the
/// system is completed.
Word normal_form(const Word& w, const RewriteSystem& system);

/// Completion failed, so normal forms are not canonical.
class RingUnavailableError : public Error {
 public:
  using Error::Error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class GroupRingElement;

/// Z[G] (or the semigroup ring) realised on Irr(S^c) for a completed S^c.
/// Immutable after construction and shared by its elements.
class GroupRing : public std::enable_shared_from_this<GroupRing> {
 public:
  /// Completes the presentation. Throws RingUnavailableError when completion
  /// hits `limits`.
  static std::shared_ptr<const GroupRing> create(const Presentation& p,
                                                 const CompletionLimits& limits = {});

  const Presentation& presentation() const { return presentation_; }
  const RewriteSystem& system() const { return system_; }
  const Alphabet& alphabet() const { return presentation_.alphabet; }
  std::size_t generator_count() const { return alphabet().generator_count(); }
  std::size_t relator_count() const { return presentation_.relators.size(); }

  GroupRingElement element(const Polynomial& p) const;
  GroupRingElement parse(std::string_view text) const;
  GroupRingElement zero() const;
  GroupRingElement one() const;

  Word normal_form(const Word& w) const;
  Polynomial reduce(const Polynomial& p) const;

  /// J_{r x}: normal form of d(r1)/dx - d(r2)/dx for relator `relator`.
  const Polynomial& fox_image(std::size_t relator, Generator x) const;

 private:
  GroupRing(Presentation p, RewriteSystem system);

  Presentation presentation_;
  RewriteSystem system_;
  std::vector<std::vector<Polynomial>> fox_images_;  // [relator][generator]
};

class GroupRingElement {
 public:
  GroupRingElement(std::shared_ptr<const GroupRing> ring, Polynomial value);

  const GroupRing& ring() const { return *ring_; }
  const std::shared_ptr<const GroupRing>& ring_ptr() const { return ring_; }
  const Polynomial& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  GroupRingElement operator+(const GroupRingElement& rhs) const;
  GroupRingElement operator-(const GroupRingElement& rhs) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& rhs) const;

  /// Same ring and same normal-form polynomial.
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  void require_same_ring(const GroupRingElement& rhs) const;

  std::shared_ptr<const GroupRing> ring_;
  Polynomial value_;
};

std::string to_string(const GroupRingElement& e);

/// Product in the quotient: free product then reduction.
GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b);

/// Vector indexed by generators or by relators; entries share one ring.
using ChainVector = std::vector<GroupRingElement>;

/// sum_i alpha_i (x_i - 1).
GroupRingElement d0(const GroupRing& ring, const ChainVector& alpha);

/// (sum_j beta_j J_{r_j x})_{x in X}, coefficients multiplied on the left.
ChainVector d1(const GroupRing& ring, const ChainVector& beta);

bool is_in_kernel_d1(const GroupRing& ring, const ChainVector& beta);

/// Unit vector e_j of length `length`.
ChainVector unit_vector(const GroupRing& ring, std::size_t length,
                        std::size_t j);

}  // namespace foxdiv
