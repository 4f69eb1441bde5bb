#pragma once

// Arithmetic of Z/p^l Z for an odd prime p: units, Legendre symbols,
// generators and discrete logarithms.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace gl2gauss {

int64_t mod(int64_t x, int64_t m);
int64_t mul_mod(int64_t a, int64_t b, int64_t m);
int64_t pow_mod(int64_t base, int64_t exp, int64_t m);
/// Exact integer power; throws Overflow past 2^62.
int64_t ipow(int64_t base, int exp);
int64_t gcd(int64_t a, int64_t b);
int64_t lcm(int64_t a, int64_t b);
bool is_prime(int64_t x);
std::vector<int64_t> prime_factors(int64_t x);

/// Inverse of x modulo `modulus`; throws NonUnit when gcd(x, modulus) != 1.
int64_t inv_mod(int64_t x, int64_t modulus);

/// Legendre symbol (x/p) in {-1, 0, 1}.
int legendre(int64_t x, int64_t p);

/// p-adic valuation of x; nullopt stands for +infinity (x == 0).
std::optional<int> valuation(int64_t x, int64_t p);

/// The ring Z/p^l Z together with its canonical unit-group generator.
///
/// Levels l >= 1 are accepted so that lower-level sums (the base case of
/// the Gauss-sum recursion, GL2(F_p)) can share the same machinery; the
/// public entry points check l >= 2 where the theory requires it.
class RingParams {
 public:
  static RingParams make(int64_t p, int l);

  int64_t p() const { return p_; }
  int l() const { return l_; }
  int m() const { return l_ / 2; }
  int n() const { return (l_ + 1) / 2; }
  int64_t modulus() const { return q_; }
  /// |(Z/p^l)^x| = p^{l-1}(p-1).
  int64_t unit_order() const { return phi_; }
  /// Smallest positive primitive root modulo p^l.
  int64_t generator() const { return g_; }
  int64_t pow_p(int k) const;

  int64_t reduce(int64_t x) const { return mod(x, q_); }
  bool is_unit(int64_t x) const { return mod(x, p_) != 0; }
  int64_t add(int64_t x, int64_t y) const { return mod(x + y, q_); }
  int64_t mul(int64_t x, int64_t y) const { return mul_mod(x, y, q_); }
  int64_t pow(int64_t x, int64_t e) const { return pow_mod(x, e, q_); }
  int64_t inv(int64_t x) const;
  int64_t dlog(int64_t x) const;

  friend bool operator==(const RingParams& a, const RingParams& b) {
    return a.p_ == b.p_ && a.l_ == b.l_;
  }

 private:
  RingParams() = default;

  int64_t p_ = 0;
  int l_ = 0;
  int64_t q_ = 0;
  int64_t phi_ = 0;
  int64_t g_ = 0;
  // dlog_[x] for x < q; -1 on non-units. Empty above the table threshold.
  std::shared_ptr<const std::vector<int32_t>> dlog_;
};

int64_t inv_mod(int64_t x, const RingParams& ring);
int64_t primitive_root(const RingParams& ring);
/// Smallest positive primitive root mod p^l computed from scratch.
int64_t primitive_root(int64_t p, int l);
/// t in [0, p^{l-1}(p-1)) with g^t = x; throws NonUnit.
int64_t discrete_log(int64_t x, const RingParams& ring);
int64_t multiplicative_order(int64_t x, const RingParams& ring);

/// Generator gamma of (Z/p^l)^x with gamma^{p^{m-1}(p-1)} = 1 + p^m, chosen
/// as g^a for the smallest admissible exponent a.
int64_t find_gamma(const RingParams& ring);

}  // namespace gl2gauss
