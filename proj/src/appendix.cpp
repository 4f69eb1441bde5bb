#include "gl2gauss/appendix.hpp"

#include "gl2gauss/residue.hpp"

namespace gl2gauss {

namespace {

// sqrt(-1/p) as 1 or zeta_4.
CycElem eps_p(int64_t p, const FieldPtr& field) {
  return p % 4 == 1 ? CycElem::integer(field, 1) : root_of_unity(field, 4, 1);
}

// p^{e/2}.
CycElem half_power(int64_t p, int e, const FieldPtr& field) {
  CycElem out = CycElem::integer(field, ipow(p, e / 2));
  if (e % 2 == 1) out = out * sqrt_p(field, p);
  return out;
}

int sign_pow(int s, int e) { return (e % 2 == 0) ? 1 : s; }

// lambda_1(2u) + s * lambda_1(-2u) at level h.
CycElem salie_pair(int64_t p, int h, int64_t u, int64_t r, int s, const FieldPtr& field) {
  const int64_t M = ipow(p, h);
  const int64_t x = mul_mod(mul_mod(2, u, M), r, M);
  return root_of_unity(field, M, x) + root_of_unity(field, M, -x) * s;
}

CycElem unit_sum(int64_t p, int h, const FieldPtr& field, bool weighted, int64_t a, int64_t r) {
  const int64_t M = ipow(p, h);
  PhaseSum sum(field);
  for (int64_t d = 1; d < M; ++d) {
    if (d % p == 0) continue;
    const int64_t x = mod(d + mul_mod(a, inv_mod(d, M), M), M);
    const int64_t ph = field->phase(M, mul_mod(r, x, M));
    if (weighted) {
      sum.add(ph, legendre(d, p));
    } else {
      sum.add(ph);
    }
  }
  return sum.value();
}

}  // namespace

void validate(const PSumParams& q) {
  if (q.p < 3 || !is_prime(q.p)) fail(Errc::BadArgument, "p must be an odd prime");
  if (q.i < 1) fail(Errc::BadArgument, "i must be at least 1");
  if (q.j < 1 || q.j > q.i) fail(Errc::BadArgument, "need 1 <= j <= i");
  if (q.k < 0 || q.k > q.i) fail(Errc::BadArgument, "need 0 <= k <= i");
  if (q.beta % q.p == 0) fail(Errc::NonUnit, "beta must be a unit");
  if (q.b % q.p == 0) fail(Errc::NonUnit, "b must be a unit");
  if (q.r % q.p == 0) fail(Errc::NonUnit, "r must be a unit");
}

FieldPtr appendix_field(int64_t p, int i) { return CyclotomicField::get(lcm(4, ipow(p, i))); }

CycElem quad_gauss_brute(int64_t p, int i, int64_t r, int64_t d, const FieldPtr& field) {
  const int64_t M = ipow(p, i);
  const int64_t coef = mod(-mul_mod(r, inv_mod(d, M), M), M);
  PhaseSum sum(field);
  for (int64_t c = 0; c < M; ++c) sum.add(field->phase(M, mul_mod(coef, mul_mod(c, c, M), M)));
  return sum.value();
}

CycElem quad_gauss_closed(int64_t p, int i, int64_t r, int64_t d, const FieldPtr& field) {
  if (d % p == 0) fail(Errc::NonUnit, "d must be a unit");
  CycElem out = half_power(p, i, field) * sign_pow(legendre(mod(-r * mod(d, p), p), p), i);
  if (i % 2 == 1) out = out * eps_p(p, field);
  return out;
}

CycElem kloosterman_brute(int64_t p, int h, int64_t a, int64_t r, const FieldPtr& field) {
  return unit_sum(p, h, field, false, a, r);
}

std::optional<int64_t> sqrt_mod_prime_power(int64_t a, int64_t p, int h) {
  const int64_t M = ipow(p, h);
  a = mod(a, M);
  for (int64_t u = 0; u < M; ++u) {
    if (mul_mod(u, u, M) == a) return u;
  }
  return std::nullopt;
}

CycElem kloosterman_closed(int64_t p, int h, int64_t a, int64_t r, const FieldPtr& field) {
  if (h < 2) fail(Errc::BadArgument, "no closed Kloosterman sum at level 1");
  if (legendre(a, p) != 1) return CycElem(field);
  const int64_t u = *sqrt_mod_prime_power(a, p, h);
  CycElem out = half_power(p, h, field) * salie_pair(p, h, u, r, sign_pow(legendre(-1, p), h), field);
  out = out * sign_pow(legendre(mod(u * mod(r, p), p), p), h);
  if (h % 2 == 1) out = out * eps_p(p, field);
  return out;
}

CycElem kprime_brute(int64_t p, int h, int64_t a, int64_t r, const FieldPtr& field) {
  return unit_sum(p, h, field, true, a, r);
}

CycElem kprime_closed(int64_t p, int h, int j, int64_t a, int64_t r, const FieldPtr& field) {
  if (legendre(a, p) != 1) return CycElem(field);
  const int64_t u = *sqrt_mod_prime_power(a, p, h);
  if (j % 2 == 0) {
    return half_power(p, h, field) * salie_pair(p, h, u, r, 1, field) * eps_p(p, field) * legendre(r, p);
  }
  return half_power(p, h, field) * salie_pair(p, h, u, r, legendre(-1, p), field) * legendre(u, p);
}

CycElem p_prefactor(const PSumParams& q) {
  const FieldPtr field = appendix_field(q.p, q.i);
  return quad_gauss_closed(q.p, q.i, q.r, 1, field);
}

PSumResult p_sum_closed(const PSumParams& q) {
  validate(q);
  const FieldPtr field = appendix_field(q.p, q.i);
  const int64_t p = q.p;
  const int i = q.i, j = q.j, k = q.k;
  PSumResult out{CycElem(field), CycElem(field), "", true};

  // Cases (ii) and (iii) share a shape with the roles of beta and b swapped.
  auto one_sided = [&](int e, int64_t coef) {
    if (e != i - 1) return CycElem(field);
    if (i % 2 == 0) return CycElem::integer(field, -ipow(p, i - 1));
    return CycElem::integer(field, ipow(p, i - 1)) * sqrt_p(field, p) * eps_p(p, field) *
           legendre(mod(coef * mod(q.r, p), p), p);
  };

  if (j == i && k == i) {
    out.case_label = "i";
    out.P1 = CycElem::integer(field, i % 2 == 0 ? ipow(p, i - 1) * (p - 1) : 0);
  } else if (j < k) {
    out.case_label = "ii";
    out.P1 = one_sided(j, q.beta);
  } else if (k < j) {
    out.case_label = "iii";
    out.P1 = one_sided(k, q.b);
  } else {
    const int h = i - j;
    const int64_t M = ipow(p, h);
    const int64_t a = mul_mod(mod(q.beta, M), mod(q.b, M), M);
    if (i % 2 == 0) {
      out.case_label = "iv";
      out.closed_exact = h > 1;
      const CycElem K = h == 1 ? kloosterman_brute(p, h, a, q.r, field) : kloosterman_closed(p, h, a, q.r, field);
      out.P1 = K * ipow(p, j);
    } else {
      out.case_label = "v";
      out.P1 = kprime_closed(p, h, j, a, q.r, field) * (ipow(p, j) * legendre(q.beta, p));
    }
  }
  out.P = p_prefactor(q) * out.P1;
  return out;
}

CycElem p_sum_brute(const PSumParams& q, long long cap) {
  validate(q);
  const int64_t p = q.p;
  const int64_t M = ipow(p, q.i);
  if (M * M > cap) fail(Errc::TooLarge, "double sum exceeds the enumeration cap");
  const FieldPtr field = appendix_field(p, q.i);
  const int64_t pj = mul_mod(ipow(p, q.j) % M, mod(q.beta, M), M);
  const int64_t pk = mul_mod(ipow(p, q.k) % M, mod(q.b, M), M);
  const int64_t r = mod(q.r, M);
  PhaseSum sum(field);
  for (int64_t d = 1; d < M; ++d) {
    if (d % p == 0) continue;
    const int64_t dinv = inv_mod(d, M);
    for (int64_t c = 0; c < M; ++c) {
      const int64_t x = mod(mul_mod(pj, d, M) + mul_mod(dinv, mod(pk - mul_mod(c, c, M), M), M), M);
      sum.add(field->phase(M, mul_mod(r, x, M)));
    }
  }
  return sum.value();
}

CycElem p1_brute(const PSumParams& q, long long cap) {
  validate(q);
  const int64_t p = q.p;
  const int64_t M = ipow(p, q.i);
  if (M > cap) fail(Errc::TooLarge, "sum exceeds the enumeration cap");
  const FieldPtr field = appendix_field(p, q.i);
  const int64_t pj = mul_mod(ipow(p, q.j) % M, mod(q.beta, M), M);
  const int64_t pk = mul_mod(ipow(p, q.k) % M, mod(q.b, M), M);
  PhaseSum sum(field);
  for (int64_t d = 1; d < M; ++d) {
    if (d % p == 0) continue;
    const int64_t x = mod(mul_mod(pj, d, M) + mul_mod(pk, inv_mod(d, M), M), M);
    sum.add(field->phase(M, mul_mod(mod(q.r, M), x, M)), sign_pow(legendre(d, p), q.i));
  }
  return sum.value();
}

}  // namespace gl2gauss
