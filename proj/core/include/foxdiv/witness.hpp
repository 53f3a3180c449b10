#pragma once

#include <cstddef>
#include <vector>

#include "foxdiv/error.hpp"
#include "foxdiv/family.hpp"
#include "foxdiv/groupring.hpp"
#include "foxdiv/ncpoly.hpp"

namespace foxdiv {

/// Zero-divisor certificate A * B for A = sum_j beta_j D_j and B = f.
struct WitnessReport {
  ChainVector beta;
  std::vector<Polynomial> D;
  Polynomial f;
  GroupRingElement A;
  GroupRingElement B;
  bool product_zero = false;
  /// A != 0 and B != 0 in the group ring.
  bool nontrivial = false;
};

class NotInKernelError : public Error {
 public:
  using Error::Error;
};

/// Raised when a bounded search would exceed its candidate budget.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

/// Checks beta in ker d1, then forms A and B and multiplies them. Throws
/// NotInKernelError when d1(beta) != 0.
WitnessReport verify_witness(const GroupRing& ring, const ChainVector& beta,
                             const std::vector<Polynomial>& D,
                             const Polynomial& f);
WitnessReport verify_witness(const GroupRing& ring, const ChainVector& beta,
                             const FactorizationReport& factors);

struct KernelSearchOptions {
  std::size_t support_len = 1;
  unsigned coeff_bound = 1;
  unsigned threads = 1;
  /// Upper bound on the number of candidate vectors examined.
  std::size_t max_candidates = 50'000'000;
};

/// Every nonzero relator-indexed vector in ker d1 whose entries are supported
/// on irreducible words of length <= support_len with coefficients in
/// [-coeff_bound, coeff_bound]. The enumeration treats the coefficient of
/// word k in entry j as digit j * N + k (least significant first) with digit
/// values 0, 1, -1, 2, -2, ...; results follow that order for any thread
/// count. Throws SearchLimitError above max_candidates.
std::vector<ChainVector> search_kernel(const GroupRing& ring,
                                       const KernelSearchOptions& options);

/// (1 - g)(1 + g + ... + g^(n-1)) = 0 in Z[<g | g^n>] with both factors
/// nonzero. Throws Error for n < 2.
bool torsion_identity_check(long n);

/// Common right divisor of the derivatives d(r_j)/dx of an arbitrary
/// presentation. Each sign-normalized nonzero derivative is tried as f; the
/// candidate with the greatest leading word that right-divides every
/// derivative wins. Falls back to f = 1.
FactorizationReport common_right_divisor(const Presentation& p, Generator x);

}  // namespace foxdiv
