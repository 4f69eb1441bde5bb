#include "gl2gauss/padic.hpp"

#include "gl2gauss/error.hpp"
#include "gl2gauss/residue.hpp"

namespace gl2gauss {

namespace {

int floor_log(int64_t j, int64_t p) {
  int e = 0;
  while (j >= p) {
    j /= p;
    ++e;
  }
  return e;
}

}  // namespace

PadicInt padic_log_unit(const PadicInt& u) {
  const int64_t p = u.p;
  const int k = u.precision;
  if (k < 1) fail(Errc::BadArgument, "precision must be positive");
  const int64_t pk = ipow(p, k);
  const int64_t x = mod(u.value - 1, pk);
  if (x % p != 0) fail(Errc::BadArgument, "padic_log_unit needs u = 1 (mod p)");
  PadicInt out{p, k, 0};
  if (x == 0) return out;

  // Term j has valuation at least j - floor(log_p j).
  for (int64_t j = 1; j - floor_log(j, p) < k; ++j) {
    int e = 0;
    int64_t jj = j;
    while (jj % p == 0) {
      jj /= p;
      ++e;
    }
    const int64_t wide = ipow(p, k + e);
    const int64_t term = pow_mod(x, j, wide) / ipow(p, e);
    const int64_t signed_term = (j % 2 == 1) ? term : -term;
    out.value = mod(out.value + mul_mod(signed_term, inv_mod(jj, pk), pk), pk);
  }
  return out;
}

int64_t odoni_sigma(const RingParams& ring) {
  const int64_t p = ring.p();
  const int guard = 2 + floor_log(2 * ring.l() + 2, p) + 1;
  const int k = ring.l() + guard;
  const int64_t pk = ipow(p, k);
  // log(1+p) = p * w with w = 1 (mod p).
  const PadicInt log1p = padic_log_unit({p, k + 1, 1 + p});
  const int64_t w = log1p.value / p;
  const int64_t w_inv = inv_mod(w, pk);
  const PadicInt log_w = padic_log_unit({p, k, w});
  // p / log(1+p) = w^{-1}, and log(w^{-1}) = -log(w).
  const int64_t sigma = mul_mod(w_inv, 1 + log_w.value, pk);
  return mod(sigma, ring.modulus());
}

}  // namespace gl2gauss
