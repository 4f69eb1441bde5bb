#pragma once

// Additive and multiplicative characters of Z/p^l, the linear characters
// phi_A of K_n, and the characters psi of the stabilizers whose inductions
// give the families X1, X2, X3 of irreducible characters of GL2(Z/p^l).
//
// Roots of unity are handled as phases: an integer e standing for zeta_N^e
// in the field the character was built with.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gl2gauss/cyclotomic.hpp"
#include "gl2gauss/group.hpp"
#include "gl2gauss/residue.hpp"

namespace gl2gauss {

/// e(x) = zeta_{p^l}^{r x}.
class AddChar {
 public:
  AddChar(const RingParams& ring, int64_t r, FieldPtr field);

  int64_t r() const { return r_; }
  const FieldPtr& field() const { return field_; }
  int64_t phase(int64_t x) const { return field_->phase(q_, mul_mod(r_, x, q_)); }
  CycElem eval(int64_t x) const { return zeta_power(field_, phase(x)); }

 private:
  int64_t q_;
  int64_t r_;
  FieldPtr field_;
};

/// chi(g^t) = zeta_phi^{c t} for the canonical generator g.
class MultChar {
 public:
  MultChar(const RingParams& ring, int64_t c, FieldPtr field);

  const RingParams& ring() const { return ring_; }
  const FieldPtr& field() const { return field_; }
  int64_t exponent() const { return c_; }
  int64_t phase(int64_t x) const { return field_->phase(ring_.unit_order(), mul_mod(c_, ring_.dlog(x), ring_.unit_order())); }
  CycElem eval(int64_t x) const { return zeta_power(field_, phase(x)); }

  MultChar operator*(const MultChar& other) const;
  MultChar pow(int64_t e) const;
  bool is_trivial() const { return c_ == 0; }
  /// Whether chi is trivial on 1 + p^k (k >= 1), i.e. factors through level k.
  bool factors_through(int k) const;
  /// Smallest k with chi factoring through (Z/p^k)^x.
  int conductor_level() const;

 private:
  RingParams ring_;
  int64_t c_;
  FieldPtr field_;
};

/// mu_alpha with mu_alpha(1+p^n) = lambda(p^n alpha), minimal nonnegative exponent.
MultChar make_mu_alpha(int64_t alpha, const RingParams& ring, FieldPtr field);
/// lambda' with lambda'(1+p^n) = lambda(p^n u), injective (exponent prime to phi).
MultChar make_lambda_prime(int64_t u, const RingParams& ring, FieldPtr field);
/// Injective nu0 with nu0(1+p^{l-1}) = zeta_p.
MultChar make_nu0(const RingParams& ring, FieldPtr field);

/// Phase of phi_A(X) = lambda(Tr(A(X - I))); NotInSubgroup unless X is in K_n.
int64_t phi_A_phase(const Mat2& A, const Mat2& X, const RingParams& ring, const CyclotomicField& field);
CycElem eval_phi_A(const Mat2& A, const Mat2& X, const RingParams& ring, const FieldPtr& field);

enum class Family { X1, X2, X3, X4 };
const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& s);

struct CharSpec {
  Family family = Family::X1;
  int64_t alpha = 0;
  // X1
  int64_t u = 1;
  int64_t i = 0, j = 0;
  // X2
  int64_t eps = 0;
  // X2: index i; X3: index j
  OmegaIndex omega;
  // X3
  int64_t beta = 0;
  int64_t i1 = 0, i2 = 0;
  // X4: power of nu
  int64_t twist = 0;
};

std::string describe(const CharSpec& spec);
/// Checks the parameter ranges; BadArgument otherwise.
void validate(const CharSpec& spec, const RingParams& ring);

/// All specs of one family with the given orbit parameters fixed by the sweep
/// (alpha, u, eps, beta ranges as listed by the classification).
std::vector<CharSpec> enumerate_specs(Family family, const RingParams& ring);

/// The matrix A0 whose phi_{A0} the family's psi restricts to on K_n.
Mat2 family_A0(const CharSpec& spec, const RingParams& ring);
int64_t family_degree(Family family, const RingParams& ring);
/// Number of characters in one orbit G(A).
int64_t orbit_size(Family family, const RingParams& ring);
/// Class sizes |X1|, |X2|, |X3| from the closed formulas.
int64_t family_count_formula(Family family, const RingParams& ring);

/// chi = (mu_alpha o det) ind_H^G psi for an X1, X2 or X3 spec.
class FamilyCharacter {
 public:
  FamilyCharacter(const RingParams& ring, const CharSpec& spec, FieldPtr field);
  FamilyCharacter(const RingParams& ring, const CharSpec& spec);

  const RingParams& ring() const { return ring_; }
  const CharSpec& spec() const { return spec_; }
  const FieldPtr& field() const { return field_; }
  const MultChar& mu() const { return mu_; }
  /// X1 only.
  const MultChar& lambda_prime() const;
  int64_t degree() const { return family_degree(spec_.family, ring_); }
  /// The stabilizer H carrying psi: T0 (X1, X3) or T (X2).
  const Subgroup& stabilizer() const { return *H_; }
  bool virtual_psi() const { return virtual_; }

  /// psi(X) for X in H as a phase; only when psi is linear.
  int64_t psi_phase(const Mat2& X) const;
  /// psi(X) for X in H (the virtual formula for X2 with l odd).
  CycElem psi(const Mat2& X) const;
  /// psi extended by zero off H.
  CycElem psi_dot(const Mat2& X) const;

  /// X2, l odd: the linear character phi_i on L = K_{m+1} S, its subgroups,
  /// and right transversals of N_{m+1} and L in T.
  int64_t phi_phase(const Mat2& X) const;
  const Subgroup& L() const;
  const Subgroup& N_next() const;

  /// X2: the torus data; X3: the ramified torus data.
  const NonsplitTorus& nonsplit() const { return *nonsplit_; }
  const RamifiedTorus& ramified() const { return *ramified_; }
  const TorusReps& reps() const;
  /// psi(s^k) (X2: theta(s^k) with theta on K_n S) as a phase.
  int64_t torus_phase(const OmegaIndex& k) const;

  /// chi(X) on all of G via right coset representatives of H.
  CycElem chi(const Mat2& X) const;

 private:
  int64_t theta_phase(const Mat2& X) const;  // X2 linear theta on K_n S
  int64_t x3_psi_phase(const Mat2& X) const;
  const std::vector<Mat2>& transversal() const;

  RingParams ring_;
  CharSpec spec_;
  FieldPtr field_;
  MultChar mu_;
  std::optional<MultChar> lambda_prime_;
  std::optional<NonsplitTorus> nonsplit_;
  std::optional<RamifiedTorus> ramified_;
  std::optional<Subgroup> H_;
  std::optional<Subgroup> L_, N_next_, N3_;
  Mat2 A0_;
  bool virtual_ = false;
  // theta generator phases
  int64_t g1_ = 0, g2_ = 0, g3_ = 0;
  mutable std::shared_ptr<const std::vector<Mat2>> transversal_;
  mutable std::shared_ptr<const std::vector<Mat2>> tr_N_, tr_L_;
};

using ClassFunction = std::function<CycElem(const Mat2&)>;

/// ind_H^G f (X) = (1/|H|) sum_{g in G} f'(g X g^{-1}), f' = f on H and 0 off H.
CycElem induced_value_brute(const Subgroup& H, const ClassFunction& f, const Mat2& X, const Subgroup& G,
                            const FieldPtr& field, long long cap = kDefaultEnumerationCap);
/// The same value as sum over right coset representatives t of f'(t X t^{-1}).
CycElem induced_value(const Subgroup& H, const ClassFunction& f, const Mat2& X, const std::vector<Mat2>& transversal,
                      const FieldPtr& field);

/// <f, g>_D = (1/|D|) sum f(x) conj(g(x)); InexactDivision if the result is not integral.
CycElem inner_product(const ClassFunction& f, const ClassFunction& g, const Subgroup& D, const FieldPtr& field,
                      long long cap = kDefaultEnumerationCap);

}  // namespace gl2gauss
