#include "foxdiv/family.hpp"

#include "foxdiv/fox.hpp"

namespace foxdiv {

Alphabet FamilySpec::alphabet_for(std::size_t ell) {
  std::vector<std::string> names{"x"};
  for (std::size_t j = 1; j <= ell; ++j) names.push_back("y" + std::to_string(j));
  return Alphabet(std::move(names), true);
}

namespace {

const Word& wx_block_word(const FamilySpec& spec, Word& scratch) {
  scratch = spec.w;
  scratch.push_back(Letter(FamilySpec::x, false));
  return scratch;
}

Word assemble(const std::vector<Word>& blocks, const Word& wx) {
  Word out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k > 0) out *= wx;
    out *= blocks[k];
  }
  return out;
}

/// Sum of the prefixes of the assembled side that end just before a w x block.
Polynomial block_prefix_sum(const std::vector<Word>& blocks, const Word& wx) {
  Polynomial out;
  Word prefix;
  for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
    if (k > 0) prefix *= wx;
    prefix *= blocks[k];
    out.add_term(prefix, 1);
  }
  return out;
}

}  // namespace

Word FamilySpec::relator_side(std::size_t i, int side) const {
  Word wx;
  const auto& rel = relators.at(i);
  return assemble(side == 1 ? rel.u : rel.v, wx_block_word(*this, wx));
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::no_y_generators: return "no_y_generators";
    case ViolationKind::no_relators: return "no_relators";
    case ViolationKind::w_must_be_nonempty: return "w_must_be_nonempty";
    case ViolationKind::w_involves_x: return "w_involves_x";
    case ViolationKind::empty_u_row: return "empty_u_row";
    case ViolationKind::empty_v_row: return "empty_v_row";
    case ViolationKind::letter_out_of_range: return "letter_out_of_range";
    case ViolationKind::block_involves_x: return "block_involves_x";
    case ViolationKind::not_freely_reduced: return "not_freely_reduced";
    case ViolationKind::cross_subword: return "cross_subword";
  }
  return "unknown";
}

std::string Violation::to_string() const {
  std::string out(foxdiv::to_string(kind));
  switch (kind) {
    case ViolationKind::empty_u_row:
    case ViolationKind::empty_v_row:
      out += "(" + std::to_string(relator) + ")";
      break;
    case ViolationKind::letter_out_of_range:
    case ViolationKind::block_involves_x:
    case ViolationKind::not_freely_reduced:
      if (relator != 0) {
        out += "(" + std::to_string(relator) + "," + std::to_string(side) + ")";
      }
      break;
    case ViolationKind::cross_subword:
      out += "(" + std::to_string(relator) + "," +
             std::to_string(other_relator) + ")";
      break;
    default:
      break;
  }
  return out;
}

std::vector<Violation> validate_family(const FamilySpec& spec) {
  std::vector<Violation> out;
  auto in_range = [&spec](const Word& word) {
    for (Letter l : word) {
      if (l.generator() > spec.ell) return false;
    }
    return true;
  };

  if (spec.ell == 0) out.push_back({ViolationKind::no_y_generators});
  if (spec.relators.empty()) out.push_back({ViolationKind::no_relators});
  if (spec.w.empty()) out.push_back({ViolationKind::w_must_be_nonempty});
  if (!in_range(spec.w)) out.push_back({ViolationKind::letter_out_of_range});
  else if (spec.w.involves(FamilySpec::x)) {
    out.push_back({ViolationKind::w_involves_x});
  }
  const bool w_ok = out.empty() ||
                    (out.size() == 1 &&
                     out.front().kind == ViolationKind::no_relators);

  std::vector<bool> assembled_ok(spec.relators.size(), false);
  for (std::size_t i = 0; i < spec.relators.size(); ++i) {
    const auto& rel = spec.relators[i];
    const std::size_t n = i + 1;
    bool ok = w_ok;
    if (rel.u.empty()) {
      out.push_back({ViolationKind::empty_u_row, n});
      ok = false;
    }
    if (rel.v.empty()) {
      out.push_back({ViolationKind::empty_v_row, n});
      ok = false;
    }
    for (int side = 1; side <= 2; ++side) {
      bool reported = false;
      for (const Word& block : side == 1 ? rel.u : rel.v) {
        if (reported) break;
        if (!in_range(block)) {
          out.push_back({ViolationKind::letter_out_of_range, n,
                         static_cast<std::size_t>(side)});
          ok = false;
          reported = true;
        } else if (block.involves(FamilySpec::x)) {
          out.push_back({ViolationKind::block_involves_x, n,
                         static_cast<std::size_t>(side)});
          ok = false;
          reported = true;
        }
      }
    }
    if (!ok) continue;
    assembled_ok[i] = true;
    for (int side = 1; side <= 2; ++side) {
      if (!spec.relator_side(i, side).is_freely_reduced()) {
        out.push_back({ViolationKind::not_freely_reduced, n,
                       static_cast<std::size_t>(side)});
      }
    }
  }

  for (std::size_t i = 0; i < spec.relators.size(); ++i) {
    if (!assembled_ok[i]) continue;
    for (std::size_t j = 0; j < spec.relators.size(); ++j) {
      if (i == j || !assembled_ok[j]) continue;
      bool found = false;
      for (int s = 1; s <= 2 && !found; ++s) {
        const Word outer = spec.relator_side(i, s);
        for (int t = 1; t <= 2 && !found; ++t) {
          const Word inner = spec.relator_side(j, t);
          if (outer.empty() || inner.empty()) continue;
          if (outer.contains(inner)) {
            out.push_back({ViolationKind::cross_subword, i + 1,
                           static_cast<std::size_t>(s), j + 1,
                           static_cast<std::size_t>(t)});
            found = true;
          }
        }
      }
    }
  }
  return out;
}

Presentation build_family(const FamilySpec& spec) {
  auto violations = validate_family(spec);
  if (!violations.empty()) throw FamilyError(violations.front());
  Presentation p;
  p.alphabet = spec.alphabet();
  p.kind = PresentationKind::group;
  for (std::size_t i = 0; i < spec.relators.size(); ++i) {
    p.relators.push_back({spec.relator_side(i, 1), spec.relator_side(i, 2)});
  }
  return p;
}

FactorizationReport factor_derivatives(const FamilySpec& spec) {
  const Presentation p = build_family(spec);
  FactorizationReport report;
  report.generator = FamilySpec::x;
  report.f = fox_derivative(spec.w, FamilySpec::x) + Polynomial(spec.w);
  Word wx;
  wx_block_word(spec, wx);
  report.exact = true;
  for (std::size_t i = 0; i < spec.relators.size(); ++i) {
    const auto& rel = spec.relators[i];
    Polynomial D = block_prefix_sum(rel.u, wx) - block_prefix_sum(rel.v, wx);
    const Polynomial derivative =
        fox_of_relator(p.relators[i].lhs, p.relators[i].rhs, FamilySpec::x);
    if (D * report.f != derivative) report.exact = false;
    report.D.push_back(std::move(D));
  }
  return report;
}

namespace {

void require_monic_divisor(const Polynomial& f, const Alphabet& a) {
  if (f.is_zero()) throw ZeroPolynomialError("right_divide by 0");
  if (!is_monic(f, a)) throw Error("right_divide needs a monic divisor");
}

}  // namespace

std::optional<Polynomial> right_divide(const Polynomial& p, const Polynomial& f,
                                       const Alphabet& a) {
  require_monic_divisor(f, a);
  const Word& lead = leading_monomial(f, a);
  Polynomial quotient;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    auto lt = leading_term(rest, a);
    if (!lt.monomial.ends_with(lead)) return std::nullopt;
    Word q = lt.monomial.prefix(lt.monomial.size() - lead.size());
    quotient.add_term(q, lt.coefficient);
    rest -= sandwich(q, f, Word{}) * lt.coefficient;
  }
  return quotient;
}

std::vector<Polynomial> elimination_chain(const Polynomial& p,
                                          const Polynomial& f,
                                          const Alphabet& a) {
  require_monic_divisor(f, a);
  const Word& lead = leading_monomial(f, a);
  std::vector<Polynomial> chain{p};
  while (!chain.back().is_zero()) {
    auto lt = leading_term(chain.back(), a);
    if (!lt.monomial.ends_with(lead)) break;
    Word q = lt.monomial.prefix(lt.monomial.size() - lead.size());
    chain.push_back(chain.back() - sandwich(q, f, Word{}) * lt.coefficient);
  }
  return chain;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::phi1_zero: return "phi1_zero";
    case CaseTag::lt_u_dfbar: return "lt_u_dfbar";
    case CaseTag::lt_r2: return "lt_r2";
    case CaseTag::lt_u_f1: return "lt_u_f1";
    case CaseTag::none: return "none";
  }
  return "none";
}

Phi1Analysis analyze_phi1(const Word& r1, const Word& r2, Generator x,
                          const Polynomial& f, const Alphabet& a) {
  Phi1Analysis out;
  if (f.is_zero()) throw ZeroPolynomialError("classify_phi1 with f = 0");
  const Polynomial d_r1 = fox_derivative(r1, x);
  if (d_r1.is_zero()) return out;
  out.fbar = leading_monomial(f, a);
  const Word& top = leading_monomial(d_r1, a);
  if (!top.ends_with(out.fbar)) return out;
  out.factorizable = true;
  out.u = top.prefix(top.size() - out.fbar.size());
  out.f1 = f - Polynomial(out.fbar, f.coefficient(out.fbar));
  out.phi1 = fox_of_relator(r1, r2, x) - sandwich(out.u, f, Word{});
  if (out.phi1.is_zero()) {
    out.tag = CaseTag::phi1_zero;
    return out;
  }
  const Word& lead = leading_monomial(out.phi1, a);
  const Polynomial d_fbar = fox_derivative(out.fbar, x);
  const Polynomial d_r2 = fox_derivative(r2, x);
  if (!d_fbar.is_zero() && lead == out.u * leading_monomial(d_fbar, a)) {
    out.tag = CaseTag::lt_u_dfbar;
  } else if (!d_r2.is_zero() && lead == leading_monomial(d_r2, a)) {
    out.tag = CaseTag::lt_r2;
  } else if (!out.f1.is_zero() &&
             lead == out.u * leading_monomial(out.f1, a)) {
    out.tag = CaseTag::lt_u_f1;
  }
  return out;
}

Phi1Analysis analyze_phi1(const FamilySpec& spec, std::size_t i,
                          const Polynomial& f) {
  const Presentation p = build_family(spec);
  const auto& rel = p.relators.at(i);
  return analyze_phi1(rel.lhs, rel.rhs, FamilySpec::x, f, p.alphabet);
}

CaseTag classify_phi1(const FamilySpec& spec, std::size_t i,
                      const Polynomial& f) {
  return analyze_phi1(spec, i, f).tag;
}

std::optional<LtUdfMatch> match_lt_udf(const Word& u1, const Word& fbar,
                                       Generator x, const Alphabet& a) {
  const Polynomial d_fbar = fox_derivative(fbar, x);
  if (d_fbar.is_zero()) return std::nullopt;
  const Word lead = u1 * leading_monomial(d_fbar, a);
  if (!lead.ends_with(fbar)) return std::nullopt;
  Word u2 = lead.prefix(lead.size() - fbar.size());
  if (!u1.starts_with(u2)) return std::nullopt;
  return LtUdfMatch{u2, u1.suffix(u1.size() - u2.size())};
}

}  // namespace foxdiv
