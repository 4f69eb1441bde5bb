#pragma once

// GL2(Z/p^l Z), the congruence-type subgroups used to build its characters,
// and the torus coset representatives s^k = s1^k1 s2^k2 s3^k3.

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gl2gauss/error.hpp"
#include "gl2gauss/residue.hpp"

namespace gl2gauss {

struct Mat2 {
  int64_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 identity();
Mat2 scalar(int64_t x);
Mat2 mat_mul(const Mat2& x, const Mat2& y, const RingParams& ring);
Mat2 mat_pow(Mat2 x, int64_t e, const RingParams& ring);  // e >= 0
Mat2 mat_inv(const Mat2& x, const RingParams& ring);       // NonUnit if det is not a unit
int64_t det(const Mat2& x, const RingParams& ring);
int64_t trace(const Mat2& x, const RingParams& ring);
Mat2 reduce_mod(const Mat2& x, int64_t modulus);
/// Dense integer key of x with entries taken mod `modulus`.
uint64_t encode(const Mat2& x, int64_t modulus);
std::string to_string(const Mat2& x);

/// |GL2(Z/p^l)| = p^{4(l-1)} (p^2-1)(p^2-p).
int64_t group_order(const RingParams& ring);

/// A subgroup cut out by congruences on the entries of (a b; c d):
///   c = 0 mod p^ec,  a = 1 mod p^ea (when ea > 0),
///   d free / d = a mod p^ed / d = 1 mod p^ed,
///   b = D*c mod p^eb,
/// intersected with the unit-determinant matrices.
class Subgroup {
 public:
  enum class DRel { Free, EqualA, One };
  struct Shape {
    int ec = 0;
    int ea = 0;
    DRel drel = DRel::Free;
    int ed = 0;
    int64_t D = 0;
    int eb = 0;
  };

  Subgroup(const RingParams& ring, std::string name, Shape shape);

  static Subgroup full(const RingParams& ring);
  /// K_i = I + p^i M_2.
  static Subgroup congruence(const RingParams& ring, int i);
  static Subgroup center(const RingParams& ring);
  /// Diagonal torus.
  static Subgroup split_torus(const RingParams& ring);
  /// (a p^mb; p^mc d) = K_m S.
  static Subgroup split_T(const RingParams& ring);
  /// (a p^nb; p^mc d).
  static Subgroup split_T0(const RingParams& ring);
  /// (1+p^na p^nb; p^mc 1+p^nd).
  static Subgroup split_N(const RingParams& ring);
  /// S_D = {(a Db; b a)}.
  static Subgroup torus(const RingParams& ring, int64_t D);
  /// K_j S_D = {(a Db+p^jc; b a+p^jd)}.
  static Subgroup torus_times_K(const RingParams& ring, int64_t D, int j);
  /// N_j = K_j Z (K_1 cap S_D) = {(a pDb+p^jc; pb a+p^jd)}.
  static Subgroup torus_N(const RingParams& ring, int64_t D, int j);
  /// (1+p^ma p^nb; p^mc 1+p^md).
  static Subgroup ramified_N(const RingParams& ring);
  /// N S for the ramified torus: (a pBb+p^nc; b a+p^md).
  static Subgroup ramified_T0(const RingParams& ring, int64_t beta);

  const RingParams& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  const Shape& shape() const { return shape_; }
  bool contains(const Mat2& x) const;
  /// Exact order, from the density of unit determinants modulo p.
  int64_t order() const { return order_; }

  /// Visits every element exactly once; TooLarge when order() exceeds cap.
  void for_each(const std::function<void(const Mat2&)>& visit, long long cap = kDefaultEnumerationCap) const;
  std::vector<Mat2> elements(long long cap = kDefaultEnumerationCap) const;

 private:
  int64_t count_order() const;

  RingParams ring_;
  std::string name_;
  Shape shape_;
  int64_t order_ = 0;
};

/// Representatives t with G = disjoint union of H t (right cosets).
std::vector<Mat2> right_transversal(const Subgroup& H, const Subgroup& G, long long cap = kDefaultEnumerationCap);

struct OmegaIndex {
  int64_t k1 = 0, k2 = 0, k3 = 0;

  friend bool operator==(const OmegaIndex&, const OmegaIndex&) = default;
};

/// s^k for k in a box Omega, with lookup of the representatives congruent
/// to a matrix modulo p^key_level.
class TorusReps {
 public:
  TorusReps(const RingParams& ring, Mat2 s1, Mat2 s2, Mat2 s3, OmegaIndex bounds, int key_level);

  const Mat2& s1() const { return s1_; }
  const Mat2& s2() const { return s2_; }
  const Mat2& s3() const { return s3_; }
  const OmegaIndex& bounds() const { return bounds_; }
  int key_level() const { return key_level_; }
  size_t size() const { return index_.size(); }
  const OmegaIndex& index(size_t t) const { return index_[t]; }
  const Mat2& rep(size_t t) const { return reps_[t]; }
  Mat2 power(const OmegaIndex& k) const;

  /// Positions t with s^{index(t)} = x (mod p^key_level).
  std::vector<size_t> candidates(const Mat2& x) const;

 private:
  RingParams ring_;
  Mat2 s1_, s2_, s3_;
  OmegaIndex bounds_;
  int key_level_;
  int64_t key_modulus_;
  std::vector<OmegaIndex> index_;
  std::vector<Mat2> reps_;
  std::unordered_multimap<uint64_t, size_t> by_key_;
};

/// Generator of order p^2-1 of the nonsplit torus {(x eps*y; y x)}: u^{p^{2(l-1)}}
/// for the lexicographically smallest u whose reduction generates F_{p^2}^x.
Mat2 find_s3_X2(int64_t eps, const RingParams& ring);

/// Nonsplit torus data for (eps/p) = -1: s1 = (1+p)I, s2 = (1 p*eps; p 1),
/// Omega = [0,p^{n-1})^2 x [0,p^2-1), keyed modulo p^n.
class NonsplitTorus {
 public:
  NonsplitTorus(const RingParams& ring, int64_t eps);

  int64_t eps() const { return eps_; }
  const TorusReps& reps() const { return reps_; }
  /// p^n delta = 2 sum_{t odd} C(p^{n-1},t) p^t eps^{(t+1)/2}.
  int64_t delta() const { return delta_; }

 private:
  int64_t eps_;
  TorusReps reps_;
  int64_t delta_;
};

/// Ramified torus data: s1 = gamma I, s2 = (1 p^2 beta; p 1), s3 = (1 p beta; 1 1),
/// Omega = [0,p^{m-1}(p-1)) x [0,p^{m-1}) x [0,p), keyed modulo p^m.
class RamifiedTorus {
 public:
  RamifiedTorus(const RingParams& ring, int64_t beta);

  int64_t beta() const { return beta_; }
  int64_t gamma() const { return gamma_; }
  const TorusReps& reps() const { return reps_; }
  /// s3^p = s1^sigma1 s2^sigma2.
  int64_t sigma1() const { return sigma1_; }
  int64_t sigma2() const { return sigma2_; }
  /// p^{m+1} delta = 2 sum_{t odd} C(p^{m-1},t) p^t (p beta)^{(t+1)/2}.
  int64_t delta() const { return delta_; }

 private:
  int64_t beta_;
  int64_t gamma_;
  TorusReps reps_;
  int64_t sigma1_ = 0, sigma2_ = 0;
  int64_t delta_;
};

/// The unique k (within `allowed`) with x in (K_m cap S) s^k, i.e. x = s^k mod p^m.
OmegaIndex find_h(const TorusReps& reps, const Mat2& x, const RingParams& ring,
                  const std::function<bool(const OmegaIndex&)>& allowed = {});

/// (-alpha/r  -D/r; -1/r  -alpha/r); NonUnit if p | r.
Mat2 h_target(int64_t alpha, int64_t D, int64_t r, const RingParams& ring);

/// Quotient of 2 sum_{t odd <= p^e} C(p^e,t) p^t D^{(t+1)/2} by p^shift, mod p^l.
/// DivisibilityFailed when the division is not exact.
int64_t binomial_delta(int64_t D, int e, int shift, const RingParams& ring);

}  // namespace gl2gauss
