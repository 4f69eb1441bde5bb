#pragma once

// Oracle sweeps shared by the CLI `verify` command and the acceptance runner.
// Every case compares a closed evaluation with an independent computation.

#include <string>
#include <vector>

#include "gl2gauss/appendix.hpp"
#include "gl2gauss/gauss.hpp"

namespace gl2gauss {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  size_t failures() const;
};

/// g_closed = g_brute for every character and every nonzero r.
SuiteReport verify_gauss(const RingParams& ring, long long cap = kDefaultEnumerationCap);
/// Odoni's value against brute force for each normalized primitive character.
SuiteReport verify_odoni(const RingParams& ring);
/// tau_closed = tau_oracle_subgroup over the specs of X1..X3 (every `stride`-th
/// spec, all nonzero r), plus the vanishing rules for p | r.
SuiteReport verify_tau(const RingParams& ring, size_t stride = 1, long long cap = kDefaultEnumerationCap);
/// X2, l odd: psi(I) = p, psi = p phi_{A0} on K_{m+1}, <psi, psi>_T = 1, and
/// the vanishing of the N_{m+1} component of tau.
SuiteReport verify_virtual_psi(const RingParams& ring, size_t samples, long long cap = kDefaultEnumerationCap);
/// One spec per family against the full-group sum, degrees, norms and
/// orthogonality of two specs.
SuiteReport verify_full_group(const RingParams& ring, long long cap = kDefaultEnumerationCap);
/// Family sizes: formula, orbit size times orbit count, and number of
/// distinct constructed characters when G is small enough to fingerprint.
SuiteReport verify_counts(const RingParams& ring, long long cap = kDefaultEnumerationCap);
/// <chi, chi> = 1 and <chi1, chi2> = 0 on sampled specs.
SuiteReport verify_irreducibility(const RingParams& ring, size_t samples, long long cap = kDefaultEnumerationCap);
/// Vanishing, recursion and residual-sum rules for nu^i theta at level l >= 3.
SuiteReport verify_x4(const RingParams& ring, long long cap = 20'000'000);
/// p_sum_closed = p_sum_brute for 1 <= i <= imax, all valid j, k and unit beta, b, r.
SuiteReport verify_appendix(int64_t p, int imax, long long cap = kDefaultEnumerationCap);
/// |g| = p^{l/2} for primitive mu, unit r; |tau / degree| = p^{2l} for X2, l even.
SuiteReport verify_magnitudes(const RingParams& ring, double tol = 1e-9);

}  // namespace gl2gauss
