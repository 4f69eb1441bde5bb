#include "gl2gauss/characters.hpp"

#include <sstream>

#include "gl2gauss/error.hpp"

namespace gl2gauss {

AddChar::AddChar(const RingParams& ring, int64_t r, FieldPtr field)
    : q_(ring.modulus()), r_(ring.reduce(r)), field_(std::move(field)) {
  if (r_ == 0) fail(Errc::BadArgument, "additive character must be nontrivial");
}

MultChar::MultChar(const RingParams& ring, int64_t c, FieldPtr field)
    : ring_(ring), c_(mod(c, ring.unit_order())), field_(std::move(field)) {}

MultChar MultChar::operator*(const MultChar& other) const { return MultChar(ring_, c_ + other.c_, field_); }

MultChar MultChar::pow(int64_t e) const { return MultChar(ring_, mul_mod(c_, mod(e, ring_.unit_order()), ring_.unit_order()), field_); }

bool MultChar::factors_through(int k) const {
  if (k >= ring_.l()) return true;
  if (k < 1) return c_ == 0;
  return mul_mod(c_, ring_.dlog(1 + ring_.pow_p(k)), ring_.unit_order()) == 0;
}

int MultChar::conductor_level() const {
  for (int k = 0; k < ring_.l(); ++k) {
    if (factors_through(k)) return k;
  }
  return ring_.l();
}

namespace {

// dlog(1 + p^k) = (phi / p^{l-k}) * unit; returns that unit mod p^{l-k}.
int64_t one_plus_log_unit(const RingParams& ring, int k) {
  const int64_t order = ring.pow_p(ring.l() - k);
  const int64_t t = ring.dlog(1 + ring.pow_p(k));
  const int64_t scale = ring.unit_order() / order;
  if (t % scale != 0) fail(Errc::ConstructionFailed, "1+p^k has unexpected order");
  return mod(t / scale, order);
}

// Smallest c = base (mod step) with gcd(c, phi) = 1.
int64_t coprime_lift(int64_t base, int64_t step, int64_t phi) {
  for (int64_t c = mod(base, step); c < phi; c += step) {
    if (gcd(c, phi) == 1) return c;
  }
  fail(Errc::ConstructionFailed, "no injective extension");
}

}  // namespace

MultChar make_mu_alpha(int64_t alpha, const RingParams& ring, FieldPtr field) {
  const int64_t pm = ring.pow_p(ring.m());
  const int64_t k = one_plus_log_unit(ring, ring.n());
  return MultChar(ring, mul_mod(alpha, inv_mod(k, pm), pm), std::move(field));
}

MultChar make_lambda_prime(int64_t u, const RingParams& ring, FieldPtr field) {
  const int64_t pm = ring.pow_p(ring.m());
  const int64_t k = one_plus_log_unit(ring, ring.n());
  return MultChar(ring, coprime_lift(mul_mod(u, inv_mod(k, pm), pm), pm, ring.unit_order()), std::move(field));
}

MultChar make_nu0(const RingParams& ring, FieldPtr field) {
  const int64_t p = ring.p();
  const int64_t k = one_plus_log_unit(ring, ring.l() - 1);
  return MultChar(ring, coprime_lift(inv_mod(k, p), p, ring.unit_order()), std::move(field));
}

int64_t phi_A_phase(const Mat2& A, const Mat2& X, const RingParams& ring, const CyclotomicField& field) {
  const int64_t pn = ring.pow_p(ring.n());
  if (mod(X.a - 1, pn) != 0 || mod(X.b, pn) != 0 || mod(X.c, pn) != 0 || mod(X.d - 1, pn) != 0) {
    fail(Errc::NotInSubgroup, to_string(X) + " is not in K_n");
  }
  const int64_t tr = ring.reduce(ring.mul(A.a, X.a - 1) + ring.mul(A.b, X.c) + ring.mul(A.c, X.b) + ring.mul(A.d, X.d - 1));
  return field.phase(ring.modulus(), tr);
}

CycElem eval_phi_A(const Mat2& A, const Mat2& X, const RingParams& ring, const FieldPtr& field) {
  return zeta_power(field, phi_A_phase(A, X, ring, *field));
}

const char* family_name(Family f) {
  switch (f) {
    case Family::X1: return "X1";
    case Family::X2: return "X2";
    case Family::X3: return "X3";
    case Family::X4: return "X4";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& s) {
  if (s == "x1" || s == "X1") return Family::X1;
  if (s == "x2" || s == "X2") return Family::X2;
  if (s == "x3" || s == "X3") return Family::X3;
  if (s == "x4" || s == "X4") return Family::X4;
  return std::nullopt;
}

std::string describe(const CharSpec& s) {
  std::ostringstream os;
  os << family_name(s.family) << "(alpha=" << s.alpha;
  switch (s.family) {
    case Family::X1: os << ",u=" << s.u << ",i=" << s.i << ",j=" << s.j; break;
    case Family::X2: os << ",eps=" << s.eps << ",i=" << s.omega.k1 << "," << s.omega.k2 << "," << s.omega.k3; break;
    case Family::X3:
      os << ",beta=" << s.beta << ",i=" << s.i1 << "," << s.i2 << ",j=" << s.omega.k1 << "," << s.omega.k2 << ","
         << s.omega.k3;
      break;
    case Family::X4: os << ",twist=" << s.twist; break;
  }
  os << ")";
  return os.str();
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(Errc::BadArgument, what);
}

bool in_box(const OmegaIndex& k, const OmegaIndex& bound) {
  return k.k1 >= 0 && k.k2 >= 0 && k.k3 >= 0 && k.k1 < bound.k1 && k.k2 < bound.k2 && k.k3 < bound.k3;
}

OmegaIndex x2_bounds(const RingParams& ring) {
  const int64_t b = ring.pow_p(ring.n() - 1);
  return {b, b, ring.p() * ring.p() - 1};
}

OmegaIndex x3_bounds(const RingParams& ring) {
  const int64_t b = ring.pow_p(ring.m() - 1);
  return {b * (ring.p() - 1), b, ring.p()};
}

template <typename F>
void for_box(const OmegaIndex& bound, F&& f) {
  for (int64_t a = 0; a < bound.k1; ++a)
    for (int64_t b = 0; b < bound.k2; ++b)
      for (int64_t c = 0; c < bound.k3; ++c) f(OmegaIndex{a, b, c});
}

}  // namespace

void validate(const CharSpec& s, const RingParams& ring) {
  const int64_t p = ring.p();
  const int64_t pm = ring.pow_p(ring.m());
  require(ring.l() >= 2, "characters need l >= 2");
  if (s.family != Family::X4) require(s.alpha >= 0 && s.alpha < pm, "alpha must lie in [0, p^m)");
  switch (s.family) {
    case Family::X1: {
      const int64_t ij = ring.pow_p(ring.n() - 1) * (p - 1);
      require(s.u >= 1 && 2 * s.u <= pm - 1 && s.u % p != 0, "u must satisfy 1 <= u <= (p^m-1)/2, p !| u");
      require(s.i >= 0 && s.i < ij && s.j >= 0 && s.j < ij, "i, j must lie in [0, p^{n-1}(p-1))");
      break;
    }
    case Family::X2:
      require(s.eps >= 0 && s.eps < pm && legendre(s.eps, p) == -1, "eps must be a nonsquare in [0, p^m)");
      require(in_box(s.omega, x2_bounds(ring)), "i outside Omega");
      break;
    case Family::X3: {
      const int64_t top = ring.pow_p(ring.n() - ring.m());
      require(s.beta >= 0 && s.beta < ring.pow_p(ring.m() - 1), "beta must lie in [0, p^{m-1})");
      require(s.i1 >= 0 && s.i1 < top && s.i2 >= 0 && s.i2 < top, "i1, i2 must lie in [0, p^{n-m})");
      require(in_box(s.omega, x3_bounds(ring)), "j outside Omega");
      break;
    }
    case Family::X4: require(s.twist >= 0 && s.twist < p, "twist must lie in [0, p)"); break;
  }
}

std::vector<CharSpec> enumerate_specs(Family family, const RingParams& ring) {
  const int64_t p = ring.p();
  const int64_t pm = ring.pow_p(ring.m());
  std::vector<CharSpec> out;
  for (int64_t alpha = 0; alpha < pm; ++alpha) {
    switch (family) {
      case Family::X1: {
        const int64_t ij = ring.pow_p(ring.n() - 1) * (p - 1);
        for (int64_t u = 1; 2 * u <= pm - 1; ++u) {
          if (u % p == 0) continue;
          for (int64_t i = 0; i < ij; ++i)
            for (int64_t j = 0; j < ij; ++j) {
              CharSpec s;
              s.family = family;
              s.alpha = alpha;
              s.u = u;
              s.i = i;
              s.j = j;
              out.push_back(s);
            }
        }
        break;
      }
      case Family::X2:
        for (int64_t eps = 0; eps < pm; ++eps) {
          if (legendre(eps, p) != -1) continue;
          for_box(x2_bounds(ring), [&](const OmegaIndex& k) {
            CharSpec s;
            s.family = family;
            s.alpha = alpha;
            s.eps = eps;
            s.omega = k;
            out.push_back(s);
          });
        }
        break;
      case Family::X3: {
        const int64_t top = ring.pow_p(ring.n() - ring.m());
        for (int64_t beta = 0; beta < ring.pow_p(ring.m() - 1); ++beta)
          for (int64_t i1 = 0; i1 < top; ++i1)
            for (int64_t i2 = 0; i2 < top; ++i2)
              for_box(x3_bounds(ring), [&](const OmegaIndex& k) {
                CharSpec s;
                s.family = family;
                s.alpha = alpha;
                s.beta = beta;
                s.i1 = i1;
                s.i2 = i2;
                s.omega = k;
                out.push_back(s);
              });
        break;
      }
      case Family::X4: fail(Errc::UnsupportedFamily, "X4 characters are not enumerated");
    }
  }
  return out;
}

Mat2 family_A0(const CharSpec& s, const RingParams& ring) {
  switch (s.family) {
    case Family::X1: return Mat2{s.u, 0, 0, 0};
    case Family::X2: return Mat2{0, s.eps, 1, 0};
    case Family::X3: return Mat2{0, ring.p() * s.beta, 1, 0};
    case Family::X4: break;
  }
  fail(Errc::UnsupportedFamily, "X4 has no A0");
}

int64_t family_degree(Family family, const RingParams& ring) {
  const int64_t p = ring.p();
  switch (family) {
    case Family::X1: return ring.pow_p(ring.l() - 1) * (p + 1);
    case Family::X2: return ring.pow_p(ring.l() - 1) * (p - 1);
    case Family::X3: return ring.pow_p(ring.l() - 2) * (p * p - 1);
    case Family::X4: break;
  }
  fail(Errc::UnsupportedFamily, "X4 degrees are those of level l-1");
}

int64_t orbit_size(Family family, const RingParams& ring) {
  const int64_t p = ring.p();
  const int n = ring.n();
  switch (family) {
    case Family::X1: return ring.pow_p(2 * n - 2) * (p - 1) * (p - 1);
    case Family::X2: return ring.pow_p(2 * n - 2) * (p * p - 1);
    case Family::X3: return ring.pow_p(2 * n - 1) * (p - 1);
    case Family::X4: break;
  }
  fail(Errc::UnsupportedFamily, "X4 has no orbit decomposition");
}

int64_t family_count_formula(Family family, const RingParams& ring) {
  const int64_t p = ring.p();
  const int l = ring.l();
  switch (family) {
    case Family::X1: return ring.pow_p(2 * l - 3) * (p - 1) * (p - 1) * (p - 1) / 2;
    case Family::X2: return ring.pow_p(2 * l - 3) * (p - 1) * (p * p - 1) / 2;
    case Family::X3: return ring.pow_p(2 * l - 2) * (p - 1);
    case Family::X4: break;
  }
  fail(Errc::UnsupportedFamily, "X4 is not counted");
}

FamilyCharacter::FamilyCharacter(const RingParams& ring, const CharSpec& spec)
    : FamilyCharacter(ring, spec, session_field(ring)) {}

FamilyCharacter::FamilyCharacter(const RingParams& ring, const CharSpec& spec, FieldPtr field)
    : ring_(ring), spec_(spec), field_(std::move(field)), mu_(make_mu_alpha(spec.alpha, ring, field_)) {
  validate(spec, ring);
  if (spec.family == Family::X4) fail(Errc::UnsupportedFamily, "X4 characters come from level l-1");
  A0_ = family_A0(spec, ring);
  const int64_t p = ring.p();
  const int l = ring.l(), m = ring.m(), n = ring.n();
  const auto& F = *field_;
  switch (spec.family) {
    case Family::X1:
      lambda_prime_ = make_lambda_prime(spec.u, ring, field_);
      H_ = Subgroup::split_T0(ring);
      break;
    case Family::X2: {
      nonsplit_.emplace(ring, spec.eps);
      H_ = Subgroup::torus_times_K(ring, spec.eps, m);
      g1_ = F.phase(ring.pow_p(n - 1), spec.omega.k1);
      g2_ = F.phase(ring.pow_p(l - 1), nonsplit_->delta() + ring.pow_p(m) * spec.omega.k2);
      g3_ = F.phase(p * p - 1, spec.omega.k3);
      if (l % 2 == 1) {
        virtual_ = true;
        L_ = Subgroup::torus_times_K(ring, spec.eps, m + 1);
        N_next_ = Subgroup::torus_N(ring, spec.eps, m + 1);
      }
      break;
    }
    case Family::X3: {
      ramified_.emplace(ring, spec.beta);
      H_ = Subgroup::ramified_T0(ring, spec.beta);
      N3_ = Subgroup::ramified_N(ring);
      const int64_t x = spec.i1 + spec.i2 + ring.pow_p(n - m) * spec.omega.k1;
      const int64_t y = ramified_->delta() + ring.pow_p(n - 1) * spec.omega.k2;
      g1_ = F.phase(ring.pow_p(n - 1) * (p - 1), x);
      g2_ = F.phase(ring.pow_p(l - 2), y);
      g3_ = mod(F.phase(ring.pow_p(n) * (p - 1), mul_mod(x, ramified_->sigma1(), ring.pow_p(n) * (p - 1))) +
                    F.phase(ring.pow_p(l - 1), mul_mod(y, ramified_->sigma2(), ring.pow_p(l - 1))) +
                    F.phase(p, spec.omega.k3),
                F.conductor());
      break;
    }
    case Family::X4: break;
  }
}

const MultChar& FamilyCharacter::lambda_prime() const {
  if (!lambda_prime_) fail(Errc::BadArgument, "lambda' exists only for X1");
  return *lambda_prime_;
}

const TorusReps& FamilyCharacter::reps() const {
  if (nonsplit_) return nonsplit_->reps();
  if (ramified_) return ramified_->reps();
  fail(Errc::UnsupportedFamily, "X1 has no torus representatives");
}

int64_t FamilyCharacter::torus_phase(const OmegaIndex& k) const {
  const int64_t N = field_->conductor();
  return mod(mul_mod(k.k1, g1_, N) + mul_mod(k.k2, g2_, N) + mul_mod(k.k3, g3_, N), N);
}

int64_t FamilyCharacter::theta_phase(const Mat2& X) const {
  const auto& reps = nonsplit_->reps();
  const auto cand = reps.candidates(X);
  if (cand.size() != 1) fail(Errc::NotInSubgroup, to_string(X) + " is not in K_n S");
  const Mat2 Y = mat_mul(X, mat_inv(reps.rep(cand[0]), ring_), ring_);
  return mod(phi_A_phase(A0_, Y, ring_, *field_) + torus_phase(reps.index(cand[0])), field_->conductor());
}

int64_t FamilyCharacter::x3_psi_phase(const Mat2& X) const {
  if (!H_->contains(X)) fail(Errc::NotInSubgroup, to_string(X) + " is not in " + H_->name());
  const auto& reps = ramified_->reps();
  const int64_t pm = ring_.pow_p(ring_.m());
  for (size_t t : reps.candidates(X)) {
    const Mat2 Y = mat_mul(X, mat_inv(reps.rep(t), ring_), ring_);
    if (!N3_->contains(Y)) continue;
    const int64_t arg = ring_.reduce(pm * ring_.reduce(spec_.i1 * (Y.a - 1) + spec_.i2 * (Y.d - 1)) +
                                     ring_.mul(ring_.p() * spec_.beta, Y.c) + Y.b);
    return mod(field_->phase(ring_.modulus(), arg) + torus_phase(reps.index(t)), field_->conductor());
  }
  fail(Errc::DecompositionFailed, to_string(X) + " has no decomposition n s^k");
}

int64_t FamilyCharacter::psi_phase(const Mat2& X) const {
  switch (spec_.family) {
    case Family::X1: {
      if (!H_->contains(X)) fail(Errc::NotInSubgroup, to_string(X) + " is not in " + H_->name());
      const int64_t N = field_->conductor();
      const int64_t pm = ring_.pow_p(ring_.m());
      const int64_t ea = mod(1 + pm * spec_.i, N), ed = mod(pm * spec_.j, N);
      return mod(mul_mod(lambda_prime_->phase(X.a), ea, N) + mul_mod(lambda_prime_->phase(X.d), ed, N), N);
    }
    case Family::X2:
      if (virtual_) fail(Errc::BadArgument, "psi is not linear for X2 with l odd");
      return theta_phase(X);
    case Family::X3: return x3_psi_phase(X);
    case Family::X4: break;
  }
  fail(Errc::UnsupportedFamily, "X4");
}

int64_t FamilyCharacter::phi_phase(const Mat2& X) const {
  if (!virtual_) fail(Errc::BadArgument, "phi_i exists only for X2 with l odd");
  return theta_phase(X);
}

const Subgroup& FamilyCharacter::L() const {
  if (!L_) fail(Errc::BadArgument, "L exists only for X2 with l odd");
  return *L_;
}

const Subgroup& FamilyCharacter::N_next() const {
  if (!N_next_) fail(Errc::BadArgument, "N_{m+1} exists only for X2 with l odd");
  return *N_next_;
}

CycElem FamilyCharacter::psi(const Mat2& X) const {
  if (!virtual_) return zeta_power(field_, psi_phase(X));
  if (!H_->contains(X)) fail(Errc::NotInSubgroup, to_string(X) + " is not in " + H_->name());
  if (!tr_N_) {
    tr_N_ = std::make_shared<const std::vector<Mat2>>(right_transversal(*N_next_, *H_));
    tr_L_ = std::make_shared<const std::vector<Mat2>>(right_transversal(*L_, *H_));
  }
  PhaseSum first(field_), second(field_);
  for (const auto& t : *tr_N_) {
    const Mat2 Z = mat_mul(mat_mul(t, X, ring_), mat_inv(t, ring_), ring_);
    if (N_next_->contains(Z)) first.add(theta_phase(Z));
  }
  for (const auto& t : *tr_L_) {
    const Mat2 Z = mat_mul(mat_mul(t, X, ring_), mat_inv(t, ring_), ring_);
    if (L_->contains(Z)) second.add(theta_phase(Z));
  }
  return first.value().exact_div(ring_.p()) - second.value();
}

CycElem FamilyCharacter::psi_dot(const Mat2& X) const {
  if (!H_->contains(X)) return CycElem(field_);
  return psi(X);
}

const std::vector<Mat2>& FamilyCharacter::transversal() const {
  if (!transversal_) {
    transversal_ = std::make_shared<const std::vector<Mat2>>(right_transversal(*H_, Subgroup::full(ring_)));
  }
  return *transversal_;
}

CycElem FamilyCharacter::chi(const Mat2& X) const {
  const auto& reps = transversal();
  CycElem total(field_);
  if (virtual_) {
    for (const auto& t : reps) total += psi_dot(mat_mul(mat_mul(t, X, ring_), mat_inv(t, ring_), ring_));
  } else {
    PhaseSum sum(field_);
    for (const auto& t : reps) {
      const Mat2 Z = mat_mul(mat_mul(t, X, ring_), mat_inv(t, ring_), ring_);
      if (H_->contains(Z)) sum.add(psi_phase(Z));
    }
    total = sum.value();
  }
  return total.shifted(mu_.phase(det(X, ring_)));
}

CycElem induced_value_brute(const Subgroup& H, const ClassFunction& f, const Mat2& X, const Subgroup& G,
                            const FieldPtr& field, long long cap) {
  const auto& ring = G.ring();
  CycElem total(field);
  G.for_each(
      [&](const Mat2& g) {
        const Mat2 Z = mat_mul(mat_mul(g, X, ring), mat_inv(g, ring), ring);
        if (H.contains(Z)) total += f(Z);
      },
      cap);
  return total.exact_div(H.order());
}

CycElem induced_value(const Subgroup& H, const ClassFunction& f, const Mat2& X, const std::vector<Mat2>& transversal,
                      const FieldPtr& field) {
  const auto& ring = H.ring();
  CycElem total(field);
  for (const auto& t : transversal) {
    const Mat2 Z = mat_mul(mat_mul(t, X, ring), mat_inv(t, ring), ring);
    if (H.contains(Z)) total += f(Z);
  }
  return total;
}

CycElem inner_product(const ClassFunction& f, const ClassFunction& g, const Subgroup& D, const FieldPtr& field,
                      long long cap) {
  CycElem total(field);
  D.for_each([&](const Mat2& x) { total += f(x) * g(x).conj(); }, cap);
  return total.exact_div(D.order());
}

}  // namespace gl2gauss
