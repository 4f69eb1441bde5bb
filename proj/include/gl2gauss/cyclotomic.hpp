#pragma once

// Exact arithmetic in Z[zeta_N].
//
// Elements are stored in the power basis 1, z, ..., z^{phi(N)-1} reduced
// modulo the N-th cyclotomic polynomial, so two elements are equal exactly
// when their coefficient vectors are equal.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gl2gauss {

class RingParams;

class CyclotomicField {
 public:
  /// Shared, immutable field of conductor N (cached per N).
  static std::shared_ptr<const CyclotomicField> get(int64_t conductor);

  int64_t conductor() const { return N_; }
  int degree() const { return degree_; }
  /// Dense coefficients of Phi_N, lowest degree first (monic).
  const std::vector<int64_t>& cyclotomic_polynomial() const { return phi_poly_; }

  /// Exponent of zeta_N equal to zeta_k^a; throws BadConductor if k does not divide N.
  int64_t phase(int64_t k, int64_t a) const;

  /// Reduces a polynomial in z of any length modulo Phi_N, in place.
  void reduce(std::vector<int64_t>& poly) const;
  /// Non-leading terms of Phi_N as (exponent, coefficient).
  const std::vector<std::pair<int, int64_t>>& tail() const { return tail_; }

  explicit CyclotomicField(int64_t conductor);

 private:
  int64_t N_;
  int degree_;
  std::vector<int64_t> phi_poly_;
  std::vector<std::pair<int, int64_t>> tail_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// The conductor lcm(4, p^l, p^2 - 1) used for every value of a (p, l) computation.
int64_t session_conductor(const RingParams& ring);
FieldPtr session_field(const RingParams& ring);

class CycElem {
 public:
  explicit CycElem(FieldPtr field);
  CycElem(FieldPtr field, std::vector<int64_t> coeffs);  // reduces

  static CycElem integer(FieldPtr field, int64_t value);

  const FieldPtr& field() const { return field_; }
  std::span<const int64_t> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The rational integer this element equals, if it is one.
  std::optional<int64_t> as_integer() const;

  CycElem& operator+=(const CycElem& other);
  CycElem& operator-=(const CycElem& other);
  CycElem& operator*=(int64_t k);
  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, int64_t k) { return a *= k; }
  friend CycElem operator*(int64_t k, CycElem a) { return a *= k; }
  friend CycElem operator*(const CycElem& a, const CycElem& b);
  CycElem operator-() const;

  /// Multiplication by zeta_N^e.
  CycElem shifted(int64_t e) const;
  CycElem pow(unsigned e) const;
  /// Complex conjugation zeta_N -> zeta_N^{-1}.
  CycElem conj() const;
  /// Exact division by a rational integer; throws InexactDivision on a remainder.
  CycElem exact_div(int64_t d) const;
  /// Image under Q(zeta_N) -> Q(zeta_M) for N | M.
  CycElem lift_to(const FieldPtr& target) const;

  friend bool operator==(const CycElem& a, const CycElem& b);

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<int64_t> coeffs_;
};

/// zeta_k^a; throws BadConductor unless k | N.
CycElem root_of_unity(const FieldPtr& field, int64_t k, int64_t a);
/// zeta_N^e.
CycElem zeta_power(const FieldPtr& field, int64_t e);

/// Evaluation at exp(2 pi i / N). Arithmetic is long double, so requests
/// above ~18 digits are served at long double precision.
std::complex<double> embed_complex(const CycElem& x, int digits = 15);

/// The positive square root of p as an element of Z[zeta_p] inside `field`.
CycElem sqrt_p(const FieldPtr& field, int64_t p);

/// Sum of integer multiples of N-th roots of unity, kept as exponent counts
/// (an element of Z[C_N]) and projected to Z[zeta_N] on demand.
class PhaseSum {
 public:
  explicit PhaseSum(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  void add(int64_t phase, int64_t multiplicity = 1) {
    int64_t e = phase % N_;
    if (e < 0) e += N_;
    counts_[static_cast<size_t>(e)] += multiplicity;
  }
  /// Adds multiplicity * zeta_N^phase * x.
  void add(const CycElem& x, int64_t phase = 0, int64_t multiplicity = 1);
  void clear();

  CycElem value() const;

 private:
  FieldPtr field_;
  int64_t N_;
  std::vector<int64_t> counts_;
};

}  // namespace gl2gauss
