#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foxdiv/error.hpp"
#include "foxdiv/groupring.hpp"
#include "foxdiv/ncpoly.hpp"
#include "foxdiv/words.hpp"

namespace foxdiv {

/// Blocks of one relation r_i1 = r_i2 of a G_{l,n} presentation.
///
///   r_i1 = u[0] w x u[1] w x ... w x u[p-1]      (p = u.size() >= 1)
///   r_i2 = v[0] w x v[1] w x ... w x v[q-1]
///
/// A single-entry `v` is the x-free word r_i2 = v_{i,0}; this covers both
/// q_i = 0 and q_i = 1. Empty blocks (the identity) are allowed.
struct FamilyRelator {
  std::vector<Word> u;
  std::vector<Word> v;
  friend bool operator==(const FamilyRelator&, const FamilyRelator&) = default;
};

/// Combinatorial data for a G_{l,n} group over x, y1, ..., yl.
/// Generator 0 is x; generator j is y_j. Precedence x > x^-1 > y1 > y1^-1 ...
struct FamilySpec {
  std::size_t ell = 1;
  Word w;
  std::vector<FamilyRelator> relators;

  static Alphabet alphabet_for(std::size_t ell);
  Alphabet alphabet() const { return alphabet_for(ell); }
  static constexpr Generator x = 0;

  Word relator_side(std::size_t i, int side) const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

enum class ViolationKind {
  no_y_generators,
  no_relators,
  w_must_be_nonempty,
  w_involves_x,
  empty_u_row,
  empty_v_row,
  letter_out_of_range,
  block_involves_x,
  not_freely_reduced,
  cross_subword,
};

std::string_view to_string(ViolationKind kind);

/// Relator indices are 1-based as in the text formats. `side` is 1 or 2.
struct Violation {
  ViolationKind kind;
  std::size_t relator = 0;
  std::size_t side = 0;
  std::size_t other_relator = 0;
  std::size_t other_side = 0;

  /// `w_must_be_nonempty`, `not_freely_reduced(2,1)`, `cross_subword(2,1)`.
  std::string to_string() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

class FamilyError : public Error {
 public:
  explicit FamilyError(Violation v)
      : Error("invalid family: " + v.to_string()), violation_(v) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Empty iff every side condition holds.
std::vector<Violation> validate_family(const FamilySpec& spec);

/// Assembles the group presentation. Throws FamilyError on the first
/// violation.
Presentation build_family(const FamilySpec& spec);

/// d(r_i)/dx = D_i f for every relator.
struct FactorizationReport {
  Generator generator = 0;
  Polynomial f;
  std::vector<Polynomial> D;
  bool exact = false;
};

/// f = d(w)/dx + w and D_i = (prefixes of r_i1 ending before each w x block)
/// minus (the same for r_i2). Throws FamilyError on an invalid spec.
FactorizationReport factor_derivatives(const FamilySpec& spec);

/// D with D f = p, by repeatedly cancelling the leading term of the
/// remainder against (monomial) * f. nullopt means not divisible. Throws
/// ZeroPolynomialError for f = 0 and Error for non-monic f.
std::optional<Polynomial> right_divide(const Polynomial& p, const Polynomial& f,
                                       const Alphabet& a);

/// Successive remainders phi_0 = p, phi_1, ... of the elimination above,
/// ending with 0 or the first remainder whose leading word does not end in
/// LT(f).
std::vector<Polynomial> elimination_chain(const Polynomial& p,
                                          const Polynomial& f,
                                          const Alphabet& a);

enum class CaseTag { phi1_zero, lt_u_dfbar, lt_r2, lt_u_f1, none };

std::string_view to_string(CaseTag tag);

/// Details behind a CaseTag. `u` is the word with LT(d r_i1/dx) = u LT(f).
struct Phi1Analysis {
  CaseTag tag = CaseTag::none;
  bool factorizable = false;
  Word u;
  Word fbar;
  Polynomial f1;
  Polynomial phi1;
};

/// phi_1 = d(r_i)/dx - u_i f with f_1 = f - LT(f), then which leading-term
/// case holds: phi_1 = 0; LT(phi_1) = u_i LT(d fbar/dx); LT(phi_1) =
/// LT(d r_i2/dx); LT(phi_1) = u_i LT(f_1); otherwise none. `i` is 0-based.
Phi1Analysis analyze_phi1(const FamilySpec& spec, std::size_t i,
                          const Polynomial& f);
CaseTag classify_phi1(const FamilySpec& spec, std::size_t i,
                      const Polynomial& f);

/// Same analysis for a bare relation r1 = r2 over any alphabet.
Phi1Analysis analyze_phi1(const Word& r1, const Word& r2, Generator x,
                          const Polynomial& f, const Alphabet& a);

/// Solution of LT(u1 d(fbar)/dx) = u2 fbar.
struct LtUdfMatch {
  Word u2;
  /// fbar has this word as a period: fbar = period * (fbar minus its last
  /// |period| letters), and u1 = u2 * period.
  Word period;
};

/// Solves LT(u1 * d(fbar)/dx) = u2 * fbar for u2 when possible.
std::optional<LtUdfMatch> match_lt_udf(const Word& u1, const Word& fbar,
                                       Generator x, const Alphabet& a);

}  // namespace foxdiv
