#include "gl2gauss/residue.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "gl2gauss/error.hpp"

namespace gl2gauss {

namespace {

constexpr int64_t kDlogTableLimit = 1'000'000;

}  // namespace

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonUnit: return "NonUnit";
    case Errc::BadArgument: return "BadArgument";
    case Errc::BadConductor: return "BadConductor";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::NotInSubgroup: return "NotInSubgroup";
    case Errc::DecompositionFailed: return "DecompositionFailed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::NotFound: return "NotFound";
    case Errc::NotUnique: return "NotUnique";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::DivisibilityFailed: return "DivisibilityFailed";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

int64_t mod(int64_t x, int64_t m) {
  int64_t r = x % m;
  return r < 0 ? r + m : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
  auto r = static_cast<__int128>(mod(a, m)) * mod(b, m) % m;
  return static_cast<int64_t>(r);
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
  if (exp < 0) {
    return pow_mod(inv_mod(base, m), -exp, m);
  }
  int64_t result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

int64_t ipow(int64_t base, int exp) {
  if (exp < 0) fail(Errc::BadArgument, "negative exponent in ipow");
  int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result) || result > (int64_t{1} << 62) ||
        result < -(int64_t{1} << 62)) {
      fail(Errc::Overflow, "integer power exceeds 2^62");
    }
  }
  return result;
}

int64_t gcd(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm(int64_t a, int64_t b) { return std::lcm(a, b); }

bool is_prime(int64_t x) {
  if (x < 2) return false;
  for (int64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

std::vector<int64_t> prime_factors(int64_t x) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

int64_t inv_mod(int64_t x, int64_t modulus) {
  int64_t a = mod(x, modulus), b = modulus;
  int64_t u = 1, v = 0;
  while (b != 0) {
    int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  if (a != 1) fail(Errc::NonUnit, std::to_string(x) + " is not invertible mod " + std::to_string(modulus));
  return mod(u, modulus);
}

int legendre(int64_t x, int64_t p) {
  int64_t r = mod(x, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<int> valuation(int64_t x, int64_t p) {
  if (x == 0) return std::nullopt;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int64_t primitive_root(int64_t p, int l) {
  if (!is_prime(p) || p < 3) fail(Errc::BadArgument, "p must be an odd prime");
  if (l < 1) fail(Errc::BadArgument, "l must be >= 1");
  const int64_t q = ipow(p, l);
  const int64_t phi = q / p * (p - 1);
  const auto factors = prime_factors(phi);
  for (int64_t g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool generates = true;
    for (int64_t f : factors) {
      if (pow_mod(g, phi / f, q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  fail(Errc::ConstructionFailed, "no primitive root found");
}

RingParams RingParams::make(int64_t p, int l) {
  if (p < 3 || !is_prime(p)) fail(Errc::BadArgument, "p must be an odd prime, got " + std::to_string(p));
  if (l < 1) fail(Errc::BadArgument, "level must be positive");
  RingParams ring;
  ring.p_ = p;
  ring.l_ = l;
  ring.g_ = primitive_root(p, l);
  ring.q_ = ipow(p, l);
  ring.phi_ = ring.q_ / p * (p - 1);
  if (ring.q_ <= kDlogTableLimit) {
    auto table = std::make_shared<std::vector<int32_t>>(ring.q_, -1);
    int64_t x = 1;
    for (int64_t t = 0; t < ring.phi_; ++t) {
      (*table)[x] = static_cast<int32_t>(t);
      x = mul_mod(x, ring.g_, ring.q_);
    }
    ring.dlog_ = std::move(table);
  }
  return ring;
}

int64_t RingParams::pow_p(int k) const { return ipow(p_, k); }

int64_t RingParams::inv(int64_t x) const { return inv_mod(x, q_); }

int64_t RingParams::dlog(int64_t x) const {
  const int64_t r = reduce(x);
  if (r % p_ == 0) fail(Errc::NonUnit, std::to_string(x) + " has no discrete log");
  if (dlog_) return (*dlog_)[r];
  // Baby-step giant-step.
  const auto step = static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(phi_))));
  std::unordered_map<int64_t, int64_t> baby;
  baby.reserve(static_cast<size_t>(step));
  int64_t cur = 1;
  for (int64_t j = 0; j < step; ++j) {
    baby.emplace(cur, j);
    cur = mul_mod(cur, g_, q_);
  }
  const int64_t giant = inv_mod(pow_mod(g_, step, q_), q_);
  int64_t y = r;
  for (int64_t i = 0; i <= step; ++i) {
    if (auto it = baby.find(y); it != baby.end()) return mod(i * step + it->second, phi_);
    y = mul_mod(y, giant, q_);
  }
  fail(Errc::ConstructionFailed, "discrete log not found");
}

int64_t inv_mod(int64_t x, const RingParams& ring) { return ring.inv(x); }

int64_t primitive_root(const RingParams& ring) { return ring.generator(); }

int64_t discrete_log(int64_t x, const RingParams& ring) { return ring.dlog(x); }

int64_t multiplicative_order(int64_t x, const RingParams& ring) {
  const int64_t t = ring.dlog(x);
  return ring.unit_order() / gcd(t, ring.unit_order());
}

int64_t find_gamma(const RingParams& ring) {
  if (ring.l() < 2) fail(Errc::BadArgument, "find_gamma needs l >= 2");
  const int64_t phi = ring.unit_order();
  const int64_t step = ring.pow_p(ring.m() - 1) * (ring.p() - 1);
  const int64_t target = ring.dlog(1 + ring.pow_p(ring.m()));
  if (target % step != 0) fail(Errc::ConstructionFailed, "1+p^m outside the image of the power map");
  // a * step = target (mod phi)  <=>  a = target/step (mod phi/step).
  const int64_t period = phi / step;
  for (int64_t a = mod(target / step, period); a < phi; a += period) {
    if (a > 0 && gcd(a, phi) == 1) return ring.pow(ring.generator(), a);
  }
  fail(Errc::ConstructionFailed, "no generator gamma with the required power");
}

}  // namespace gl2gauss
