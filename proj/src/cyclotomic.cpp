#include "gl2gauss/cyclotomic.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "gl2gauss/error.hpp"
#include "gl2gauss/residue.hpp"

namespace gl2gauss {

namespace {

using Poly = std::vector<int64_t>;

// q(x) = a(x) / b(x) for monic-up-to-sign b; the remainder must vanish.
Poly exact_poly_div(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  const int64_t lead = b.back();
  Poly quot(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    if (a[k] % lead != 0) fail(Errc::InexactDivision, "cyclotomic polynomial division");
    const int64_t c = a[k] / lead;
    quot[k - db] = c;
    for (size_t t = 0; t <= db; ++t) a[k - db + t] -= c * b[t];
  }
  for (size_t k = 0; k < db; ++k) {
    if (a[k] != 0) fail(Errc::InexactDivision, "cyclotomic polynomial division");
  }
  return quot;
}

Poly substitute_power(const Poly& a, int64_t e) {
  Poly out(static_cast<size_t>((a.size() - 1) * e + 1), 0);
  for (size_t k = 0; k < a.size(); ++k) out[k * e] = a[k];
  return out;
}

Poly cyclotomic_poly(int64_t N) {
  Poly cur{-1, 1};  // Phi_1
  int64_t rad = 1;
  for (int64_t q : prime_factors(N)) {
    cur = exact_poly_div(substitute_power(cur, q), cur);
    rad *= q;
  }
  return N == rad ? cur : substitute_power(cur, N / rad);
}

template <typename Int>
void reduce_with(std::vector<Int>& poly, int degree, const std::vector<std::pair<int, int64_t>>& tail) {
  for (size_t k = poly.size(); k-- > static_cast<size_t>(degree);) {
    const Int c = poly[k];
    if (c == 0) continue;
    poly[k] = 0;
    const size_t base = k - static_cast<size_t>(degree);
    for (const auto& [e, coef] : tail) poly[base + e] -= c * coef;
  }
  poly.resize(static_cast<size_t>(degree));
}

}  // namespace

CyclotomicField::CyclotomicField(int64_t conductor) : N_(conductor) {
  if (conductor < 1) fail(Errc::BadConductor, "conductor must be positive");
  phi_poly_ = cyclotomic_poly(conductor);
  degree_ = static_cast<int>(phi_poly_.size()) - 1;
  for (int k = 0; k < degree_; ++k) {
    if (phi_poly_[k] != 0) tail_.emplace_back(k, phi_poly_[k]);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int64_t conductor) {
  static std::mutex mu;
  static std::map<int64_t, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[conductor];
  if (!slot) slot = std::make_shared<const CyclotomicField>(conductor);
  return slot;
}

int64_t CyclotomicField::phase(int64_t k, int64_t a) const {
  if (k <= 0 || N_ % k != 0) {
    fail(Errc::BadConductor, std::to_string(k) + " does not divide " + std::to_string(N_));
  }
  return mod(mod(a, k) * (N_ / k), N_);
}

void CyclotomicField::reduce(std::vector<int64_t>& poly) const {
  if (poly.size() < static_cast<size_t>(degree_)) {
    poly.resize(static_cast<size_t>(degree_), 0);
    return;
  }
  reduce_with(poly, degree_, tail_);
}

int64_t session_conductor(const RingParams& ring) {
  return lcm(lcm(4, ring.modulus()), ring.p() * ring.p() - 1);
}

FieldPtr session_field(const RingParams& ring) { return CyclotomicField::get(session_conductor(ring)); }

CycElem::CycElem(FieldPtr field) : field_(std::move(field)), coeffs_(static_cast<size_t>(field_->degree()), 0) {}

CycElem::CycElem(FieldPtr field, std::vector<int64_t> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  field_->reduce(coeffs_);
}

CycElem CycElem::integer(FieldPtr field, int64_t value) {
  CycElem out(std::move(field));
  out.coeffs_[0] = value;
  return out;
}

bool CycElem::is_zero() const {
  for (int64_t c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<int64_t> CycElem::as_integer() const {
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return std::nullopt;
  }
  return coeffs_.empty() ? 0 : coeffs_[0];
}

namespace {

void require_same_field(const CycElem& a, const CycElem& b) {
  if (a.field() != b.field() && a.field()->conductor() != b.field()->conductor()) {
    fail(Errc::BadConductor, "mixing elements of different cyclotomic fields");
  }
}

int64_t checked(__int128 v) {
  if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min()) {
    fail(Errc::Overflow, "cyclotomic coefficient exceeds 64 bits");
  }
  return static_cast<int64_t>(v);
}

}  // namespace

CycElem& CycElem::operator+=(const CycElem& other) {
  require_same_field(*this, other);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (__builtin_add_overflow(coeffs_[k], other.coeffs_[k], &coeffs_[k])) fail(Errc::Overflow, "addition");
  }
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& other) {
  require_same_field(*this, other);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (__builtin_sub_overflow(coeffs_[k], other.coeffs_[k], &coeffs_[k])) fail(Errc::Overflow, "subtraction");
  }
  return *this;
}

CycElem& CycElem::operator*=(int64_t k) {
  for (auto& c : coeffs_) {
    if (__builtin_mul_overflow(c, k, &c)) fail(Errc::Overflow, "scalar multiplication");
  }
  return *this;
}

CycElem CycElem::operator-() const { return *this * -1; }

CycElem operator*(const CycElem& a, const CycElem& b) {
  require_same_field(a, b);
  const size_t d = a.coeffs_.size();
  std::vector<__int128> prod(2 * d - 1, 0);
  for (size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) prod[i + j] += static_cast<__int128>(a.coeffs_[i]) * b.coeffs_[j];
  }
  reduce_with(prod, a.field_->degree(), a.field_->tail());
  CycElem out(a.field_);
  for (size_t k = 0; k < d; ++k) out.coeffs_[k] = checked(prod[k]);
  return out;
}

CycElem CycElem::shifted(int64_t e) const {
  const int64_t N = field_->conductor();
  e = mod(e, N);
  std::vector<int64_t> poly(static_cast<size_t>(N), 0);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) poly[static_cast<size_t>(mod(static_cast<int64_t>(k) + e, N))] += coeffs_[k];
  }
  return CycElem(field_, std::move(poly));
}

CycElem CycElem::pow(unsigned e) const {
  CycElem result = integer(field_, 1);
  CycElem base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

CycElem CycElem::conj() const {
  const int64_t N = field_->conductor();
  std::vector<int64_t> poly(static_cast<size_t>(N), 0);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) poly[static_cast<size_t>(mod(-static_cast<int64_t>(k), N))] += coeffs_[k];
  }
  return CycElem(field_, std::move(poly));
}

CycElem CycElem::exact_div(int64_t d) const {
  if (d == 0) fail(Errc::InexactDivision, "division by zero");
  CycElem out = *this;
  for (auto& c : out.coeffs_) {
    if (c % d != 0) fail(Errc::InexactDivision, "coefficient " + std::to_string(c) + " not divisible by " + std::to_string(d));
    c /= d;
  }
  return out;
}

CycElem CycElem::lift_to(const FieldPtr& target) const {
  const int64_t N = field_->conductor();
  const int64_t M = target->conductor();
  if (M % N != 0) fail(Errc::BadConductor, "target conductor must be a multiple");
  std::vector<int64_t> poly(static_cast<size_t>(M), 0);
  for (size_t k = 0; k < coeffs_.size(); ++k) poly[k * static_cast<size_t>(M / N)] = coeffs_[k];
  return CycElem(target, std::move(poly));
}

bool operator==(const CycElem& a, const CycElem& b) {
  return a.field_->conductor() == b.field_->conductor() && a.coeffs_ == b.coeffs_;
}

std::string CycElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const int64_t a = c < 0 ? -c : c;
    if (k == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    first = false;
  }
  if (first) os << "0";
  os << " (N=" << field_->conductor() << ")";
  return os.str();
}

CycElem root_of_unity(const FieldPtr& field, int64_t k, int64_t a) { return zeta_power(field, field->phase(k, a)); }

CycElem zeta_power(const FieldPtr& field, int64_t e) {
  const int64_t N = field->conductor();
  std::vector<int64_t> poly(static_cast<size_t>(N), 0);
  poly[static_cast<size_t>(mod(e, N))] = 1;
  return CycElem(field, std::move(poly));
}

std::complex<double> embed_complex(const CycElem& x, int digits) {
  (void)digits;
  const long double N = static_cast<long double>(x.field()->conductor());
  long double re = 0, im = 0;
  const auto coeffs = x.coeffs();
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / N;
    re += static_cast<long double>(coeffs[k]) * std::cos(angle);
    im += static_cast<long double>(coeffs[k]) * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

CycElem sqrt_p(const FieldPtr& field, int64_t p) {
  PhaseSum sum(field);
  for (int64_t x = 0; x < p; ++x) sum.add(field->phase(p, x * x));
  CycElem g = sum.value();
  // The quadratic Gauss sum is sqrt(p) for p = 1 mod 4 and i*sqrt(p) otherwise.
  if (p % 4 == 3) g = g.shifted(field->phase(4, -1));
  return g;
}

PhaseSum::PhaseSum(FieldPtr field)
    : field_(std::move(field)), N_(field_->conductor()), counts_(static_cast<size_t>(N_), 0) {}

void PhaseSum::add(const CycElem& x, int64_t phase, int64_t multiplicity) {
  const auto coeffs = x.coeffs();
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) add(static_cast<int64_t>(k) + phase, coeffs[k] * multiplicity);
  }
}

void PhaseSum::clear() { std::fill(counts_.begin(), counts_.end(), 0); }

CycElem PhaseSum::value() const { return CycElem(field_, counts_); }

}  // namespace gl2gauss
