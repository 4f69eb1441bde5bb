#pragma once

// Gauss sums g_l(mu, e) over Z/p^l and tau_l(chi, e) over GL2(Z/p^l):
// closed forms and brute-force oracles.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gl2gauss/characters.hpp"

namespace gl2gauss {

struct GaussValue {
  CycElem exact;
  std::optional<std::complex<double>> embedding;
};

GaussValue with_embedding(CycElem x);

/// sum over units x of mu(x) e(x).
GaussValue g_brute(const MultChar& mu, const AddChar& e, long long cap = kDefaultEnumerationCap);
/// Closed evaluation: descent for p | r, vanishing for imprimitive mu, and the
/// stationary-phase value at the critical point otherwise.
GaussValue g_closed(const MultChar& mu, const AddChar& e);

/// Primitive characters normalized by nu(1+p) = zeta_{p^{l-1}}^{-1}.
std::vector<MultChar> odoni_normalized_characters(const RingParams& ring, FieldPtr field);
/// Odoni's value of g_l(nu) for a normalized primitive nu and r = 1.
CycElem odoni_value(const RingParams& ring, FieldPtr field);

struct OdoniReport {
  int64_t exponent;  // of the character on the canonical generator
  CycElem brute;
  bool matches;
};
std::vector<OdoniReport> odoni_check(const RingParams& ring, FieldPtr field);

/// tau_l(chi, e) with e(1) = zeta_{p^l}^r from the closed formulas.
GaussValue tau_closed(const FamilyCharacter& chi, int64_t r);
/// [G : H] sum_{x in H} mu(det x) psi(x) e(Tr x); for X2 with l odd the
/// two-component form over N_{m+1} and L.
GaussValue tau_oracle_subgroup(const FamilyCharacter& chi, int64_t r, long long cap = kDefaultEnumerationCap);
/// The N_{m+1} component alone (X2, l odd): sum over N_{m+1} of mu(det x) phi'(x) e(Tr x).
CycElem x2_odd_first_component(const FamilyCharacter& chi, int64_t r, long long cap = kDefaultEnumerationCap);
/// sum over all of G of chi(X) e(Tr X).
GaussValue tau_oracle_full(const FamilyCharacter& chi, int64_t r, long long cap = kDefaultEnumerationCap);

/// A character of GL2(Z/p^{l-1}) used to build nu^i theta at level l.
struct Theta {
  ClassFunction values;  // receives matrices reduced mod p^{l-1}
  /// Set when theta is a library character; enables the closed tau_{l-1}.
  std::optional<CharSpec> spec;
};

/// theta = (mu o det) ind psi for a spec at level l-1, valued in the level-l field.
Theta theta_from_spec(const RingParams& ring, const CharSpec& spec);

struct X4Result {
  enum class Kind { Zero, Recursion, Residual };
  Kind kind;
  GaussValue value;
  std::string method;
};

/// tau_l(nu^i theta): zero cases, p^4 tau_{l-1}(theta, e') for i = 0 and p | r,
/// and the residual sum for 1 <= i < p, p !| r.
X4Result tau_X4(const RingParams& ring, int64_t twist, const Theta& theta, int64_t r,
                long long cap = kDefaultEnumerationCap);
/// sum over GL2(Z/p^l) of nu0(det X)^i theta(X mod p^{l-1}) e(Tr X).
GaussValue tau_X4_brute(const RingParams& ring, int64_t twist, const Theta& theta, int64_t r,
                        long long cap = kDefaultEnumerationCap);

}  // namespace gl2gauss
