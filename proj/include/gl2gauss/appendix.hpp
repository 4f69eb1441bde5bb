#pragma once

// The double sum
//   P = sum_{0 <= c, d < p^i, p !| d} lambda(p^j beta d + d^{-1}(p^k b - c^2)),
// lambda(1) = zeta_{p^i}^r, its quadratic Gauss sum factor and the remaining
// single sum P1 with its Kloosterman and Salie pieces.
//
// Everything here lives at its own level i (or h = i - j for the Kloosterman
// pieces), independent of any RingParams.

#include <cstdint>
#include <optional>
#include <string>

#include "gl2gauss/cyclotomic.hpp"
#include "gl2gauss/error.hpp"

namespace gl2gauss {

struct PSumParams {
  int64_t p = 3;
  int i = 1, j = 1, k = 0;
  int64_t beta = 1, b = 1;
  int64_t r = 1;
};

/// 1 <= j <= i, 0 <= k <= i, beta, b, r units; BadArgument / NonUnit otherwise.
void validate(const PSumParams& params);

/// Q(zeta_{lcm(4, p^i)}).
FieldPtr appendix_field(int64_t p, int i);

/// sum_{0 <= c < p^i} lambda(-d^{-1} c^2).
CycElem quad_gauss_brute(int64_t p, int i, int64_t r, int64_t d, const FieldPtr& field);
/// (-r d / p)^i (-1/p)^{delta_i / 2} p^{i/2}.
CycElem quad_gauss_closed(int64_t p, int i, int64_t r, int64_t d, const FieldPtr& field);

/// K = sum_{d < p^h, p !| d} lambda_1(d + a d^{-1}), lambda_1(1) = zeta_{p^h}^r.
CycElem kloosterman_brute(int64_t p, int h, int64_t a, int64_t r, const FieldPtr& field);
/// Salie closed form, h >= 2.
CycElem kloosterman_closed(int64_t p, int h, int64_t a, int64_t r, const FieldPtr& field);

/// K' = sum_{d < p^h, p !| d} (d/p) lambda_1(d + a d^{-1}).
CycElem kprime_brute(int64_t p, int h, int64_t a, int64_t r, const FieldPtr& field);
/// Closed K' for the parity of j (h = i - j with i odd).
CycElem kprime_closed(int64_t p, int h, int j, int64_t a, int64_t r, const FieldPtr& field);

/// Smaller square root of a modulo p^h, if any.
std::optional<int64_t> sqrt_mod_prime_power(int64_t a, int64_t p, int h);

struct PSumResult {
  CycElem P;
  CycElem P1;
  std::string case_label;  // "i" .. "v"
  /// False in case (iv) with i - j = 1, where K comes from the direct sum.
  bool closed_exact = true;
};

PSumResult p_sum_closed(const PSumParams& params);
CycElem p_sum_brute(const PSumParams& params, long long cap = kDefaultEnumerationCap);
/// P1 = sum_{d unit} (d/p)^i lambda(p^j beta d + p^k b d^{-1}).
CycElem p1_brute(const PSumParams& params, long long cap = kDefaultEnumerationCap);
/// The Gauss-sum prefactor with P = prefactor * P1.
CycElem p_prefactor(const PSumParams& params);

}  // namespace gl2gauss
