#pragma once

// Truncated p-adic integers, enough to evaluate Odoni's constant sigma.

#include <cstdint>

namespace gl2gauss {

class RingParams;

struct PadicInt {
  int64_t p = 0;
  int precision = 0;
  int64_t value = 0;  // reduced mod p^precision
};

/// log(u) for u = 1 (mod p), correct modulo p^precision.
PadicInt padic_log_unit(const PadicInt& u);

/// sigma = (p / log(1+p)) * (1 - log(p / log(1+p))) reduced mod p^l.
int64_t odoni_sigma(const RingParams& ring);

}  // namespace gl2gauss
