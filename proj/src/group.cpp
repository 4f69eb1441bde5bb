#include "gl2gauss/group.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace gl2gauss {

Mat2 identity() { return Mat2{}; }

Mat2 scalar(int64_t x) { return Mat2{x, 0, 0, x}; }

Mat2 mat_mul(const Mat2& x, const Mat2& y, const RingParams& ring) {
  const int64_t q = ring.modulus();
  auto dot = [q](int64_t u, int64_t v, int64_t s, int64_t t) {
    return static_cast<int64_t>((static_cast<__int128>(u) * v + static_cast<__int128>(s) * t) % q);
  };
  return Mat2{dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c), dot(x.c, y.b, x.d, y.d)};
}

Mat2 mat_pow(Mat2 x, int64_t e, const RingParams& ring) {
  if (e < 0) fail(Errc::BadArgument, "negative matrix power");
  Mat2 result = identity();
  while (e > 0) {
    if (e & 1) result = mat_mul(result, x, ring);
    x = mat_mul(x, x, ring);
    e >>= 1;
  }
  return result;
}

int64_t det(const Mat2& x, const RingParams& ring) { return ring.reduce(ring.mul(x.a, x.d) - ring.mul(x.b, x.c)); }

int64_t trace(const Mat2& x, const RingParams& ring) { return ring.add(x.a, x.d); }

Mat2 mat_inv(const Mat2& x, const RingParams& ring) {
  const int64_t t = ring.inv(det(x, ring));
  return Mat2{ring.mul(x.d, t), ring.mul(-x.b, t), ring.mul(-x.c, t), ring.mul(x.a, t)};
}

Mat2 reduce_mod(const Mat2& x, int64_t modulus) {
  return Mat2{mod(x.a, modulus), mod(x.b, modulus), mod(x.c, modulus), mod(x.d, modulus)};
}

uint64_t encode(const Mat2& x, int64_t modulus) {
  const auto q = static_cast<uint64_t>(modulus);
  const Mat2 r = reduce_mod(x, modulus);
  return ((static_cast<uint64_t>(r.a) * q + static_cast<uint64_t>(r.b)) * q + static_cast<uint64_t>(r.c)) * q +
         static_cast<uint64_t>(r.d);
}

std::string to_string(const Mat2& x) {
  std::ostringstream os;
  os << "[[" << x.a << ", " << x.b << "], [" << x.c << ", " << x.d << "]]";
  return os.str();
}

int64_t group_order(const RingParams& ring) {
  const int64_t p = ring.p();
  return ring.pow_p(4 * (ring.l() - 1)) * (p * p - 1) * (p * p - p);
}

Subgroup::Subgroup(const RingParams& ring, std::string name, Shape shape)
    : ring_(ring), name_(std::move(name)), shape_(shape) {
  auto clamp = [&](int e) { return std::min(std::max(e, 0), ring.l()); };
  shape_.ec = clamp(shape_.ec);
  shape_.ea = clamp(shape_.ea);
  shape_.ed = shape_.drel == DRel::Free ? 0 : clamp(shape_.ed);
  shape_.eb = clamp(shape_.eb);
  shape_.D = ring.reduce(shape_.D);
  order_ = count_order();
}

Subgroup Subgroup::full(const RingParams& ring) { return Subgroup(ring, "G", {}); }

Subgroup Subgroup::congruence(const RingParams& ring, int i) {
  return Subgroup(ring, "K" + std::to_string(i), {i, i, DRel::One, i, 0, i});
}

Subgroup Subgroup::center(const RingParams& ring) {
  const int l = ring.l();
  return Subgroup(ring, "Z", {l, 0, DRel::EqualA, l, 0, l});
}

Subgroup Subgroup::split_torus(const RingParams& ring) {
  const int l = ring.l();
  return Subgroup(ring, "S(split)", {l, 0, DRel::Free, 0, 0, l});
}

Subgroup Subgroup::split_T(const RingParams& ring) {
  const int m = ring.m();
  return Subgroup(ring, "T(split)", {m, 0, DRel::Free, 0, 0, m});
}

Subgroup Subgroup::split_T0(const RingParams& ring) {
  return Subgroup(ring, "T0(split)", {ring.m(), 0, DRel::Free, 0, 0, ring.n()});
}

Subgroup Subgroup::split_N(const RingParams& ring) {
  const int n = ring.n();
  return Subgroup(ring, "N(split)", {ring.m(), n, DRel::One, n, 0, n});
}

Subgroup Subgroup::torus(const RingParams& ring, int64_t D) {
  const int l = ring.l();
  return Subgroup(ring, "S(D=" + std::to_string(D) + ")", {0, 0, DRel::EqualA, l, D, l});
}

Subgroup Subgroup::torus_times_K(const RingParams& ring, int64_t D, int j) {
  return Subgroup(ring, "K" + std::to_string(j) + "S(D=" + std::to_string(D) + ")", {0, 0, DRel::EqualA, j, D, j});
}

Subgroup Subgroup::torus_N(const RingParams& ring, int64_t D, int j) {
  return Subgroup(ring, "N" + std::to_string(j) + "(D=" + std::to_string(D) + ")", {1, 0, DRel::EqualA, j, D, j});
}

Subgroup Subgroup::ramified_N(const RingParams& ring) {
  const int m = ring.m();
  return Subgroup(ring, "N(ramified)", {m, m, DRel::One, m, 0, ring.n()});
}

Subgroup Subgroup::ramified_T0(const RingParams& ring, int64_t beta) {
  return Subgroup(ring, "T0(ramified)", {0, 0, DRel::EqualA, ring.m(), ring.p() * beta, ring.n()});
}

bool Subgroup::contains(const Mat2& x0) const {
  const Mat2 x = reduce_mod(x0, ring_.modulus());
  const auto& s = shape_;
  if (!ring_.is_unit(det(x, ring_))) return false;
  if (mod(x.c, ring_.pow_p(s.ec)) != 0) return false;
  if (s.ea > 0 && mod(x.a - 1, ring_.pow_p(s.ea)) != 0) return false;
  if (s.drel == DRel::EqualA && mod(x.d - x.a, ring_.pow_p(s.ed)) != 0) return false;
  if (s.drel == DRel::One && mod(x.d - 1, ring_.pow_p(s.ed)) != 0) return false;
  if (mod(x.b - ring_.mul(s.D, x.c), ring_.pow_p(s.eb)) != 0) return false;
  return true;
}

int64_t Subgroup::count_order() const {
  const int64_t p = ring_.p();
  const auto& s = shape_;
  const int free_digits = 4 * ring_.l() - s.ec - s.ea - s.ed - s.eb;
  // The constraint set is a coset of a subgroup of (Z/p^l)^4 and the unit
  // condition only depends on its image mod p, whose fibres have equal size.
  int64_t image = 0, good = 0;
  for (int64_t a = 0; a < p; ++a) {
    if (s.ea > 0 && a != 1) continue;
    for (int64_t c = 0; c < p; ++c) {
      if (s.ec > 0 && c != 0) continue;
      for (int64_t d = 0; d < p; ++d) {
        if (s.drel == DRel::EqualA && s.ed > 0 && d != a) continue;
        if (s.drel == DRel::One && s.ed > 0 && d != 1) continue;
        for (int64_t b = 0; b < p; ++b) {
          if (s.eb > 0 && mod(b - s.D * c, p) != 0) continue;
          ++image;
          if (mod(a * d - b * c, p) != 0) ++good;
        }
      }
    }
  }
  const int image_digits = (s.ea > 0 ? 0 : 1) + (s.ec > 0 ? 0 : 1) + (s.ed > 0 ? 0 : 1) + (s.eb > 0 ? 0 : 1);
  if (image != ipow(p, image_digits)) fail(Errc::ConstructionFailed, "unexpected image size mod p");
  return ipow(p, free_digits - image_digits) * good;
}

void Subgroup::for_each(const std::function<void(const Mat2&)>& visit, long long cap) const {
  if (order_ > cap) {
    fail(Errc::TooLarge, name_ + " has " + std::to_string(order_) + " elements, cap is " + std::to_string(cap));
  }
  const int64_t q = ring_.modulus();
  const auto& s = shape_;
  const int64_t step_c = ring_.pow_p(s.ec), step_a = ring_.pow_p(s.ea), step_d = ring_.pow_p(s.ed),
                step_b = ring_.pow_p(s.eb);
  const int64_t a0 = s.ea > 0 ? 1 : 0;
  for (int64_t c = 0; c < q; c += step_c) {
    const int64_t b0 = ring_.mul(s.D, c) % step_b;
    for (int64_t a = a0 % step_a; a < q; a += step_a) {
      int64_t d0 = 0;
      if (s.drel == DRel::EqualA) d0 = a % step_d;
      if (s.drel == DRel::One) d0 = 1 % step_d;
      for (int64_t d = d0; d < q; d += step_d) {
        const int64_t ad = ring_.mul(a, d);
        for (int64_t b = b0; b < q; b += step_b) {
          if (ring_.is_unit(ad - ring_.mul(b, c))) visit(Mat2{a, b, c, d});
        }
      }
    }
  }
}

std::vector<Mat2> Subgroup::elements(long long cap) const {
  std::vector<Mat2> out;
  out.reserve(static_cast<size_t>(std::min<int64_t>(order_, cap)));
  for_each([&](const Mat2& x) { out.push_back(x); }, cap);
  return out;
}

std::vector<Mat2> right_transversal(const Subgroup& H, const Subgroup& G, long long cap) {
  const auto& ring = G.ring();
  const int64_t q = ring.modulus();
  const auto h_elems = H.elements(cap);
  std::unordered_set<uint64_t> covered;
  covered.reserve(static_cast<size_t>(G.order()));
  std::vector<Mat2> reps;
  G.for_each(
      [&](const Mat2& g) {
        if (covered.contains(encode(g, q))) return;
        reps.push_back(g);
        for (const auto& h : h_elems) covered.insert(encode(mat_mul(h, g, ring), q));
      },
      cap);
  if (static_cast<int64_t>(reps.size()) * H.order() != G.order()) {
    fail(Errc::ConstructionFailed, H.name() + " is not a subgroup of " + G.name());
  }
  return reps;
}

TorusReps::TorusReps(const RingParams& ring, Mat2 s1, Mat2 s2, Mat2 s3, OmegaIndex bounds, int key_level)
    : ring_(ring), s1_(s1), s2_(s2), s3_(s3), bounds_(bounds), key_level_(key_level),
      key_modulus_(ring.pow_p(key_level)) {
  Mat2 p1 = identity();
  for (int64_t k1 = 0; k1 < bounds.k1; ++k1) {
    Mat2 p12 = p1;
    for (int64_t k2 = 0; k2 < bounds.k2; ++k2) {
      Mat2 p123 = p12;
      for (int64_t k3 = 0; k3 < bounds.k3; ++k3) {
        by_key_.emplace(encode(p123, key_modulus_), reps_.size());
        index_.push_back({k1, k2, k3});
        reps_.push_back(p123);
        p123 = mat_mul(p123, s3, ring);
      }
      p12 = mat_mul(p12, s2, ring);
    }
    p1 = mat_mul(p1, s1, ring);
  }
}

Mat2 TorusReps::power(const OmegaIndex& k) const {
  return mat_mul(mat_mul(mat_pow(s1_, k.k1, ring_), mat_pow(s2_, k.k2, ring_), ring_), mat_pow(s3_, k.k3, ring_), ring_);
}

std::vector<size_t> TorusReps::candidates(const Mat2& x) const {
  std::vector<size_t> out;
  auto [lo, hi] = by_key_.equal_range(encode(x, key_modulus_));
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool generates_fp2(const Mat2& u, const RingParams& ring) {
  const int64_t p = ring.p();
  const RingParams base = RingParams::make(p, 1);
  const Mat2 u0 = reduce_mod(u, p);
  if (!base.is_unit(det(u0, base))) return false;
  const int64_t order = p * p - 1;
  for (int64_t f : prime_factors(order)) {
    if (mat_pow(u0, order / f, base) == identity()) return false;
  }
  return true;
}

int64_t matrix_order(const Mat2& x, const RingParams& ring, int64_t limit) {
  Mat2 y = x;
  for (int64_t k = 1; k <= limit; ++k) {
    if (y == identity()) return k;
    y = mat_mul(y, x, ring);
  }
  fail(Errc::ConstructionFailed, "matrix order exceeds search limit");
}

}  // namespace

Mat2 find_s3_X2(int64_t eps, const RingParams& ring) {
  const int64_t p = ring.p();
  if (legendre(eps, p) != -1) fail(Errc::BadArgument, "eps must be a nonsquare mod p");
  for (int64_t x = 0; x < p; ++x) {
    for (int64_t y = 0; y < p; ++y) {
      const Mat2 u{x, ring.mul(eps, y), y, x};
      if (!generates_fp2(u, ring)) continue;
      const Mat2 s3 = mat_pow(u, ring.pow_p(2 * (ring.l() - 1)), ring);
      const Mat2 s = mat_pow(s3, p + 1, ring);
      if (s.b != 0 || s.c != 0 || s.a != s.d) fail(Errc::ConstructionFailed, "s3^{p+1} is not scalar");
      return s3;
    }
  }
  fail(Errc::ConstructionFailed, "no generator of F_{p^2}^x found");
}

int64_t binomial_delta(int64_t D, int e, int shift, const RingParams& ring) {
  using boost::multiprecision::cpp_int;
  const int64_t p = ring.p();
  const int64_t top = ring.pow_p(e);
  cpp_int modulus = 1;
  for (int k = 0; k < ring.l() + shift; ++k) modulus *= p;
  cpp_int sum = 0;
  cpp_int binom = 1;  // C(top, t)
  cpp_int p_pow = 1;
  for (int64_t t = 1; t <= top; ++t) {
    binom = binom * (top - t + 1) / t;
    p_pow *= p;
    if (t % 2 == 0) continue;
    cpp_int Dpow = boost::multiprecision::powm(cpp_int(mod(D, ring.modulus())), cpp_int((t + 1) / 2), modulus);
    sum = (sum + 2 * (binom % modulus) * (p_pow % modulus) % modulus * Dpow) % modulus;
  }
  cpp_int divisor = 1;
  for (int k = 0; k < shift; ++k) divisor *= p;
  if (sum % divisor != 0) fail(Errc::DivisibilityFailed, "binomial sum is not divisible by p^shift");
  cpp_int quotient = (sum / divisor) % ring.modulus();
  return quotient.convert_to<int64_t>();
}

NonsplitTorus::NonsplitTorus(const RingParams& ring, int64_t eps)
    : eps_(ring.reduce(eps)),
      reps_(ring, scalar(1 + ring.p()), Mat2{1, ring.mul(ring.p(), eps), ring.p(), 1}, find_s3_X2(eps, ring),
            OmegaIndex{ring.pow_p(ring.n() - 1), ring.pow_p(ring.n() - 1), ring.p() * ring.p() - 1}, ring.n()),
      delta_(binomial_delta(eps, ring.n() - 1, ring.n(), ring)) {
  if (!ring.is_unit(delta_)) fail(Errc::ConstructionFailed, "delta is not a unit");
}

RamifiedTorus::RamifiedTorus(const RingParams& ring, int64_t beta)
    : beta_(beta),
      gamma_(find_gamma(ring)),
      reps_(ring, scalar(gamma_), Mat2{1, ring.mul(ring.p() * ring.p(), beta), ring.p(), 1},
            Mat2{1, ring.mul(ring.p(), beta), 1, 1},
            OmegaIndex{ring.pow_p(ring.m() - 1) * (ring.p() - 1), ring.pow_p(ring.m() - 1), ring.p()}, ring.m()),
      delta_(binomial_delta(ring.p() * beta, ring.m() - 1, ring.m() + 1, ring)) {
  const Mat2 target = mat_pow(reps_.s3(), ring.p(), ring);
  const Mat2 s2_inv = mat_inv(reps_.s2(), ring);
  const int64_t ord2 = matrix_order(reps_.s2(), ring, ring.modulus() * ring.modulus());
  const int64_t log_gamma_inv = inv_mod(ring.dlog(gamma_), ring.unit_order());
  Mat2 y = target;
  for (int64_t b = 0; b < ord2; ++b) {
    if (y.b == 0 && y.c == 0 && y.a == y.d) {
      sigma2_ = b;
      sigma1_ = mod(ring.dlog(y.a) * log_gamma_inv, ring.unit_order());
      return;
    }
    y = mat_mul(y, s2_inv, ring);
  }
  fail(Errc::ConstructionFailed, "s3^p is not in <s1> x <s2>");
}

OmegaIndex find_h(const TorusReps& reps, const Mat2& x, const RingParams& ring,
                  const std::function<bool(const OmegaIndex&)>& allowed) {
  const int64_t pm = ring.pow_p(ring.m());
  const Mat2 key = reduce_mod(x, pm);
  std::optional<OmegaIndex> found;
  for (size_t t = 0; t < reps.size(); ++t) {
    if (allowed && !allowed(reps.index(t))) continue;
    if (reduce_mod(reps.rep(t), pm) != key) continue;
    if (found) fail(Errc::NotUnique, "more than one h matches");
    found = reps.index(t);
  }
  if (!found) fail(Errc::NotFound, "no h matches " + to_string(x));
  return *found;
}

Mat2 h_target(int64_t alpha, int64_t D, int64_t r, const RingParams& ring) {
  const int64_t ri = ring.inv(r);
  const int64_t diag = ring.mul(-alpha, ri);
  return Mat2{diag, ring.mul(-D, ri), ring.reduce(-ri), diag};
}

}  // namespace gl2gauss
