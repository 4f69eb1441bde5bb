#include "gl2gauss/verify.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace gl2gauss {

void SuiteReport::add(std::string name, bool passed, std::string detail) {
  cases.push_back({std::move(name), passed, std::move(detail)});
}

bool SuiteReport::passed() const { return failures() == 0 && !cases.empty(); }

size_t SuiteReport::failures() const {
  size_t bad = 0;
  for (const auto& c : cases) bad += c.passed ? 0 : 1;
  return bad;
}

namespace {

std::string ring_tag(const RingParams& ring) {
  return "(" + std::to_string(ring.p()) + "," + std::to_string(ring.l()) + ")";
}

std::string fingerprint(const CycElem& x) {
  std::string out;
  for (int64_t c : x.coeffs()) {
    out += std::to_string(c);
    out += ',';
  }
  return out;
}

// Several specs spread over the list, always including the first and last.
std::vector<CharSpec> sample(const std::vector<CharSpec>& specs, size_t count) {
  if (specs.size() <= count) return specs;
  std::vector<CharSpec> out;
  for (size_t t = 0; t < count; ++t) out.push_back(specs[t * (specs.size() - 1) / (count - 1)]);
  return out;
}

ClassFunction as_function(const FamilyCharacter& chi) {
  return [&chi](const Mat2& X) { return chi.chi(X); };
}

}  // namespace

SuiteReport verify_gauss(const RingParams& ring, long long cap) {
  SuiteReport report{"gauss " + ring_tag(ring), {}};
  const FieldPtr field = session_field(ring);
  for (int64_t c = 0; c < ring.unit_order(); ++c) {
    const MultChar mu(ring, c, field);
    int64_t bad = 0, first_bad = 0;
    for (int64_t r = 1; r < ring.modulus(); ++r) {
      const AddChar e(ring, r, field);
      if (!(g_closed(mu, e).exact == g_brute(mu, e, cap).exact)) {
        if (bad++ == 0) first_bad = r;
      }
    }
    report.add("mu=g^" + std::to_string(c), bad == 0,
               bad == 0 ? std::to_string(ring.modulus() - 1) + " values of r"
                        : std::to_string(bad) + " mismatches, first at r=" + std::to_string(first_bad));
  }
  return report;
}

SuiteReport verify_odoni(const RingParams& ring) {
  SuiteReport report{"odoni " + ring_tag(ring), {}};
  const FieldPtr field = session_field(ring);
  const CycElem expected = odoni_value(ring, field);
  for (const auto& rep : odoni_check(ring, field)) {
    report.add("nu=g^" + std::to_string(rep.exponent), rep.matches,
               rep.matches ? "brute value equals the closed value" : "brute " + rep.brute.to_string() +
                                                                      " vs closed " + expected.to_string());
  }
  return report;
}

SuiteReport verify_tau(const RingParams& ring, size_t stride, long long cap) {
  SuiteReport report{"tau " + ring_tag(ring), {}};
  const int64_t p = ring.p();
  if (stride == 0) stride = 1;
  for (Family fam : {Family::X1, Family::X2, Family::X3}) {
    const auto specs = enumerate_specs(fam, ring);
    for (size_t t = 0; t < specs.size(); t += stride) {
      const FamilyCharacter chi(ring, specs[t]);
      int64_t bad = 0, first_bad = 0;
      bool vanish = true;
      for (int64_t r = 1; r < ring.modulus(); ++r) {
        const CycElem closed = tau_closed(chi, r).exact;
        if (!(closed == tau_oracle_subgroup(chi, r, cap).exact)) {
          if (bad++ == 0) first_bad = r;
        }
        const bool must_vanish = (fam != Family::X1 && r % p == 0) || (fam == Family::X3 && specs[t].alpha % p == 0);
        if (must_vanish && !closed.is_zero()) vanish = false;
      }
      std::string detail = bad == 0 ? "all r agree" : std::to_string(bad) + " mismatches, first at r=" + std::to_string(first_bad);
      if (!vanish) detail += "; nonzero value where the sum must vanish";
      report.add(describe(specs[t]), bad == 0 && vanish, detail);
    }
  }
  return report;
}

SuiteReport verify_virtual_psi(const RingParams& ring, size_t samples, long long cap) {
  SuiteReport report{"virtual psi " + ring_tag(ring), {}};
  if (ring.l() % 2 == 0) {
    report.add("l odd required", false, "psi is linear for even l");
    return report;
  }
  const int64_t p = ring.p();
  const Subgroup K = Subgroup::congruence(ring, ring.m() + 1);
  for (const auto& spec : sample(enumerate_specs(Family::X2, ring), samples)) {
    const FamilyCharacter chi(ring, spec);
    const auto& field = chi.field();
    const std::string name = describe(spec);
    report.add(name + " psi(I)=p", chi.psi(identity()) == CycElem::integer(field, p));

    bool restricts = true;
    const Mat2 A0 = family_A0(spec, ring);
    K.for_each([&](const Mat2& X) {
      if (!(chi.psi(X) == eval_phi_A(A0, X, ring, field) * p)) restricts = false;
    }, cap);
    report.add(name + " psi=p*phi on K_{m+1}", restricts);

    const ClassFunction psi = [&chi](const Mat2& X) { return chi.psi(X); };
    const CycElem norm = inner_product(psi, psi, chi.stabilizer(), field, cap);
    report.add(name + " <psi,psi>_T=1", norm == CycElem::integer(field, 1), norm.to_string());

    bool first_zero = true;
    for (int64_t r = 1; r < ring.modulus(); ++r) {
      if (r % p != 0 && !x2_odd_first_component(chi, r, cap).is_zero()) first_zero = false;
    }
    report.add(name + " N_{m+1} component vanishes", first_zero);
  }
  return report;
}

SuiteReport verify_full_group(const RingParams& ring, long long cap) {
  SuiteReport report{"full group " + ring_tag(ring), {}};
  std::vector<FamilyCharacter> chars;
  for (Family fam : {Family::X1, Family::X2, Family::X3}) {
    const auto specs = enumerate_specs(fam, ring);
    chars.emplace_back(ring, specs[specs.size() / 2]);
  }
  const Subgroup G = Subgroup::full(ring);
  for (const auto& chi : chars) {
    const std::string name = describe(chi.spec());
    bool agree = true;
    for (int64_t r = 1; r < ring.modulus(); ++r) {
      if (!(tau_closed(chi, r).exact == tau_oracle_full(chi, r, cap).exact)) agree = false;
    }
    report.add(name + " tau closed = full sum", agree, "all r");
    const CycElem deg = chi.chi(identity());
    report.add(name + " chi(I)=degree", deg == CycElem::integer(chi.field(), chi.degree()), deg.to_string());
    const auto f = as_function(chi);
    const CycElem norm = inner_product(f, f, G, chi.field(), cap);
    report.add(name + " <chi,chi>=1", norm == CycElem::integer(chi.field(), 1), norm.to_string());
  }
  const auto specs = enumerate_specs(Family::X1, ring);
  const FamilyCharacter a(ring, specs.front()), b(ring, specs.back());
  const CycElem cross = inner_product(as_function(a), as_function(b), G, a.field(), cap);
  report.add(describe(a.spec()) + " vs " + describe(b.spec()) + " <chi1,chi2>=0", cross.is_zero(), cross.to_string());
  return report;
}

SuiteReport verify_counts(const RingParams& ring, long long cap) {
  SuiteReport report{"counts " + ring_tag(ring), {}};
  const int64_t G = group_order(ring);
  std::set<std::string> seen;
  for (Family fam : {Family::X1, Family::X2, Family::X3}) {
    const auto specs = enumerate_specs(fam, ring);
    const int64_t formula = family_count_formula(fam, ring);
    const std::string tag = family_name(fam);
    report.add(tag + " count", static_cast<int64_t>(specs.size()) == formula,
               "enumerated " + std::to_string(specs.size()) + ", formula " + std::to_string(formula));

    std::map<std::vector<int64_t>, int64_t> orbits;
    for (const auto& s : specs) {
      std::vector<int64_t> key{s.alpha};
      if (fam == Family::X1) key.push_back(s.u);
      if (fam == Family::X2) key.push_back(s.eps);
      if (fam == Family::X3) key.push_back(s.beta);
      ++orbits[key];
    }
    bool sizes = true;
    for (const auto& [key, size] : orbits) sizes = sizes && size == orbit_size(fam, ring);
    report.add(tag + " orbit size", sizes,
               std::to_string(orbits.size()) + " orbits of size " + std::to_string(orbit_size(fam, ring)));

    if (G * static_cast<int64_t>(specs.size()) > cap) continue;
    const auto elements = Subgroup::full(ring).elements(cap);
    size_t distinct = 0;
    for (const auto& s : specs) {
      const FamilyCharacter chi(ring, s);
      std::string key;
      for (const auto& X : elements) key += fingerprint(chi.chi(X)) + ";";
      distinct += seen.insert(key).second ? 1 : 0;
    }
    report.add(tag + " distinct characters", distinct == specs.size(),
               std::to_string(distinct) + " distinct among " + std::to_string(specs.size()));
  }
  return report;
}

SuiteReport verify_irreducibility(const RingParams& ring, size_t samples, long long cap) {
  SuiteReport report{"irreducibility " + ring_tag(ring), {}};
  const Subgroup G = Subgroup::full(ring);
  if (G.order() > cap) {
    report.add("group size", false, "|G| exceeds the enumeration cap");
    return report;
  }
  std::vector<FamilyCharacter> chars;
  for (Family fam : {Family::X1, Family::X2, Family::X3}) {
    for (const auto& s : sample(enumerate_specs(fam, ring), samples)) chars.emplace_back(ring, s);
  }
  const auto elements = G.elements(cap);
  std::vector<std::vector<CycElem>> values;
  for (const auto& chi : chars) {
    std::vector<CycElem> v;
    v.reserve(elements.size());
    for (const auto& X : elements) v.push_back(chi.chi(X));
    values.push_back(std::move(v));
  }
  const FieldPtr field = chars.front().field();
  auto pairing = [&](size_t a, size_t b) {
    CycElem total(field);
    for (size_t t = 0; t < elements.size(); ++t) total += values[a][t] * values[b][t].conj();
    return total.exact_div(G.order());
  };
  for (size_t a = 0; a < chars.size(); ++a) {
    const CycElem norm = pairing(a, a);
    report.add(describe(chars[a].spec()) + " <chi,chi>=1", norm == CycElem::integer(field, 1), norm.to_string());
  }
  for (size_t a = 0; a + 1 < chars.size(); ++a) {
    const CycElem cross = pairing(a, a + 1);
    report.add(describe(chars[a].spec()) + " vs " + describe(chars[a + 1].spec()), cross.is_zero(), cross.to_string());
  }
  return report;
}

SuiteReport verify_x4(const RingParams& ring, long long cap) {
  SuiteReport report{"x4 " + ring_tag(ring), {}};
  if (ring.l() < 3) {
    report.add("l >= 3 required", false, "theta lives at level l-1 >= 2");
    return report;
  }
  const int64_t p = ring.p();
  const RingParams lower = RingParams::make(p, ring.l() - 1);
  const FieldPtr field = session_field(ring);
  std::vector<CharSpec> thetas;
  for (Family fam : {Family::X1, Family::X2, Family::X3}) {
    const auto specs = enumerate_specs(fam, lower);
    thetas.push_back(specs[specs.size() / 3]);
  }
  for (const auto& spec : thetas) {
    const Theta theta = theta_from_spec(ring, spec);
    const std::string name = "theta=" + describe(spec);

    const auto z1 = tau_X4(ring, 1, theta, p, cap);
    const auto z0 = tau_X4(ring, 0, theta, 1, cap);
    report.add(name + " i=1, p|r vanishes",
               z1.kind == X4Result::Kind::Zero && tau_X4_brute(ring, 1, theta, p, cap).exact.is_zero());
    report.add(name + " i=0, p!|r vanishes",
               z0.kind == X4Result::Kind::Zero && tau_X4_brute(ring, 0, theta, 1, cap).exact.is_zero());

    const FamilyCharacter chi(lower, spec, field);
    const CycElem lower_tau = tau_oracle_subgroup(chi, 1, cap).exact.lift_to(field);
    const CycElem brute = tau_X4_brute(ring, 0, theta, p, cap).exact;
    const auto rec = tau_X4(ring, 0, theta, p, cap);
    report.add(name + " tau_l = p^4 tau_{l-1}", brute == lower_tau * (p * p * p * p) && rec.value.exact == brute,
               rec.method);

    const auto res = tau_X4(ring, 1, theta, 1, cap);
    report.add(name + " residual sum", res.kind == X4Result::Kind::Residual &&
                                           res.value.exact == tau_X4_brute(ring, 1, theta, 1, cap).exact);
  }
  return report;
}

SuiteReport verify_appendix(int64_t p, int imax, long long cap) {
  SuiteReport report{"appendix p=" + std::to_string(p), {}};
  for (int i = 1; i <= imax; ++i) {
    const int64_t M = ipow(p, i);
    for (int j = 1; j <= i; ++j)
      for (int k = 0; k <= i; ++k) {
        int64_t total = 0, bad = 0, factor_bad = 0;
        std::string label;
        bool closed_exact = true;
        for (int64_t beta = 1; beta < M; ++beta)
          for (int64_t b = 1; b < M; ++b)
            for (int64_t r = 1; r < M; ++r) {
              if (beta % p == 0 || b % p == 0 || r % p == 0) continue;
              const PSumParams q{p, i, j, k, beta, b, r};
              const PSumResult closed = p_sum_closed(q);
              label = closed.case_label;
              closed_exact = closed_exact && closed.closed_exact;
              ++total;
              const CycElem brute = p_sum_brute(q, cap);
              if (!(closed.P == brute)) ++bad;
              if (!(p_prefactor(q) * p1_brute(q, cap) == brute)) ++factor_bad;
            }
        std::ostringstream name;
        name << "i=" << i << " j=" << j << " k=" << k << " case " << label;
        std::ostringstream detail;
        detail << total << " (beta,b,r)";
        if (!closed_exact) detail << ", K by direct sum";
        if (bad) detail << ", " << bad << " closed mismatches";
        if (factor_bad) detail << ", " << factor_bad << " factorization mismatches";
        report.add(name.str(), bad == 0 && factor_bad == 0, detail.str());
      }
  }
  return report;
}

SuiteReport verify_magnitudes(const RingParams& ring, double tol) {
  SuiteReport report{"magnitudes " + ring_tag(ring), {}};
  const FieldPtr field = session_field(ring);
  const int64_t p = ring.p();
  const double gauss_target = std::pow(static_cast<double>(p), ring.l() / 2.0);
  double worst = 0;
  int64_t count = 0;
  for (int64_t c = 0; c < ring.unit_order(); ++c) {
    const MultChar mu(ring, c, field);
    if (mu.factors_through(ring.l() - 1)) continue;
    for (int64_t r = 1; r < ring.modulus(); ++r) {
      if (r % p == 0) continue;
      const GaussValue g = g_closed(mu, AddChar(ring, r, field));
      worst = std::max(worst, std::abs(std::abs(*g.embedding) - gauss_target));
      worst = std::max(worst, std::abs(*g.embedding - embed_complex(g.exact)));
      ++count;
    }
  }
  report.add("|g| = p^{l/2}", worst <= tol,
             std::to_string(count) + " pairs, max deviation " + std::to_string(worst));

  if (ring.l() % 2 == 0) {
    const double tau_target = std::pow(static_cast<double>(p), 2.0 * ring.l());
    worst = 0;
    count = 0;
    for (const auto& spec : enumerate_specs(Family::X2, ring)) {
      const FamilyCharacter chi(ring, spec);
      for (int64_t r = 1; r < ring.modulus(); ++r) {
        if (r % p == 0) continue;
        const GaussValue t = tau_closed(chi, r);
        worst = std::max(worst, std::abs(std::abs(*t.embedding) / chi.degree() - tau_target));
        ++count;
      }
    }
    report.add("X2 |tau/degree| = p^{2l}", worst <= tol,
               std::to_string(count) + " pairs, max deviation " + std::to_string(worst));
  }
  return report;
}

}  // namespace gl2gauss
