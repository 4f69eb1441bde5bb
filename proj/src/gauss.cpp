#include "gl2gauss/gauss.hpp"

#include "gl2gauss/error.hpp"
#include "gl2gauss/padic.hpp"

namespace gl2gauss {

GaussValue with_embedding(CycElem x) {
  const auto z = embed_complex(x);
  return GaussValue{std::move(x), z};
}

GaussValue g_brute(const MultChar& mu, const AddChar& e, long long cap) {
  const auto& ring = mu.ring();
  if (ring.unit_order() > cap) fail(Errc::TooLarge, "too many units for a brute-force Gauss sum");
  PhaseSum sum(mu.field());
  for (int64_t x = 1; x < ring.modulus(); ++x) {
    if (ring.is_unit(x)) sum.add(mu.phase(x) + e.phase(x));
  }
  return with_embedding(sum.value());
}

namespace {

// sum over units x mod p^k of mu(x) zeta_{p^k}^{r x}, for mu factoring through
// level k and r a unit.
CycElem level_sum(const MultChar& mu, int64_t r, int k) {
  const auto& ring = mu.ring();
  const auto& field = mu.field();
  const int64_t p = ring.p();
  const int64_t pk = ring.pow_p(k);
  if (k == 1) {
    PhaseSum sum(field);
    for (int64_t x = 1; x < p; ++x) sum.add(mu.phase(x) + field->phase(p, r * x));
    return sum.value();
  }
  if (mu.factors_through(k - 1)) return CycElem(field);

  const int mk = k / 2, nk = (k + 1) / 2;
  const int64_t pm = ring.pow_p(mk);
  // mu(1 + p^{nk} z) = zeta_{p^mk}^{b z}.
  const int64_t ph = mu.phase(1 + ring.pow_p(nk));
  const int64_t b = ph / (field->conductor() / pm);
  const int64_t y0 = mod(-mul_mod(b, inv_mod(r, pm), pm), pm);
  PhaseSum fibre(field);
  const int64_t lead = mu.phase(y0) + field->phase(pk, mul_mod(r, y0, pk));
  if (mk == nk) {
    fibre.add(lead);
  } else {
    const int64_t y0_inv = inv_mod(y0, pk);
    for (int64_t t = 0; t < p; ++t) {
      fibre.add(lead + mu.phase(1 + pm * mul_mod(y0_inv, t, pk)) + field->phase(pk, mul_mod(r, pm * t, pk)));
    }
  }
  return fibre.value() * pm;
}

}  // namespace

GaussValue g_closed(const MultChar& mu, const AddChar& e) {
  const auto& ring = mu.ring();
  const int64_t r = e.r();
  const int v = *valuation(r, ring.p());
  const int k = ring.l() - v;
  if (!mu.factors_through(k)) return with_embedding(CycElem(mu.field()));
  return with_embedding(level_sum(mu, r / ring.pow_p(v), k) * ring.pow_p(v));
}

std::vector<MultChar> odoni_normalized_characters(const RingParams& ring, FieldPtr field) {
  std::vector<MultChar> out;
  const int64_t want = field->phase(ring.pow_p(ring.l() - 1), -1);
  for (int64_t c = 0; c < ring.unit_order(); ++c) {
    MultChar nu(ring, c, field);
    if (nu.phase(1 + ring.p()) == want) out.push_back(nu);
  }
  return out;
}

CycElem odoni_value(const RingParams& ring, FieldPtr field) {
  const int64_t p = ring.p();
  const int l = ring.l();
  const int64_t q = ring.modulus();
  // p^{l/2}
  CycElem scale = CycElem::integer(field, ring.pow_p(l / 2));
  if (l % 2 == 1) scale = scale * sqrt_p(field, p);
  int64_t phase = 0;
  if (l == 2) {
    phase = field->phase(q, 1);
  } else if (l == 3) {
    phase = field->phase(q, 1) + field->phase(4, (1 - p) / 2) + field->phase(p, (p * p - 1) / 8);
  } else {
    phase = field->phase(q, odoni_sigma(ring));
    if (l % 2 == 1) phase += field->phase(4, (1 - p) / 2);
  }
  return scale.shifted(phase);
}

std::vector<OdoniReport> odoni_check(const RingParams& ring, FieldPtr field) {
  const CycElem expected = odoni_value(ring, field);
  const AddChar e(ring, 1, field);
  std::vector<OdoniReport> out;
  for (const auto& nu : odoni_normalized_characters(ring, field)) {
    CycElem brute = g_brute(nu, e).exact;
    const bool ok = brute == expected;
    out.push_back({nu.exponent(), std::move(brute), ok});
  }
  return out;
}

GaussValue tau_closed(const FamilyCharacter& chi, int64_t r) {
  const auto& ring = chi.ring();
  const auto& spec = chi.spec();
  const auto& field = chi.field();
  const int64_t p = ring.p();
  const int l = ring.l(), m = ring.m();
  const AddChar e(ring, r, field);
  const MultChar& mu = chi.mu();
  const int64_t deg = chi.degree();
  const bool p_divides_r = e.r() % p == 0;

  switch (spec.family) {
    case Family::X1: {
      const MultChar& lp = chi.lambda_prime();
      const int64_t pm = ring.pow_p(m);
      const MultChar first = mu * lp.pow(1 + pm * spec.i);
      const MultChar second = mu * lp.pow(pm * spec.j);
      return with_embedding(g_closed(first, e).exact * g_closed(second, e).exact * (deg * ring.pow_p(l)));
    }
    case Family::X2: {
      if (p_divides_r) return with_embedding(CycElem(field));
      const auto& reps = chi.reps();
      const Mat2 target = h_target(spec.alpha, spec.eps, e.r(), ring);
      const auto term = [&](const OmegaIndex& k) {
        const Mat2 s = reps.power(k);
        return mu.phase(det(s, ring)) + e.phase(trace(s, ring)) + chi.torus_phase(k);
      };
      if (l % 2 == 0) {
        const OmegaIndex h = find_h(reps, target, ring);
        return with_embedding(zeta_power(field, term(h)) * (deg * ring.pow_p(2 * l)));
      }
      const int64_t step = ring.pow_p(m - 1);
      const OmegaIndex h = find_h(reps, target, ring, [&](const OmegaIndex& k) { return k.k1 < step && k.k2 < step; });
      PhaseSum sum(field);
      for (int64_t t1 = 0; t1 < p; ++t1)
        for (int64_t t2 = 0; t2 < p; ++t2) sum.add(term({h.k1 + t1 * step, h.k2 + t2 * step, h.k3}));
      return with_embedding(sum.value() * (-deg * ring.pow_p(2 * l - 1)));
    }
    case Family::X3: {
      if (p_divides_r || spec.alpha % p == 0) return with_embedding(CycElem(field));
      const auto& reps = chi.reps();
      const OmegaIndex h = find_h(reps, h_target(spec.alpha, p * spec.beta, e.r(), ring), ring);
      const Mat2 s = reps.power(h);
      const int64_t head = mu.phase(det(s, ring)) + e.phase(trace(s, ring)) + chi.torus_phase(h);
      const int64_t pm = ring.pow_p(m);
      const int64_t top = ring.pow_p(ring.n() - m);
      auto t_sum = [&](int64_t i) {
        PhaseSum sum(field);
        for (int64_t t = 0; t < top; ++t) {
          sum.add(mu.phase(1 + pm * t) + field->phase(ring.modulus(), ring.mul(pm * pm, i * t)) +
                  e.phase(ring.mul(pm, ring.mul(s.a, t))));
        }
        return sum.value();
      };
      return with_embedding(zeta_power(field, head) * t_sum(spec.i1) * t_sum(spec.i2) * (deg * ring.pow_p(l + 2 * m)));
    }
    case Family::X4: break;
  }
  fail(Errc::UnsupportedFamily, "use tau_X4 for X4");
}

namespace {

int64_t exact_index(int64_t big, int64_t small) {
  if (big % small != 0) fail(Errc::InexactDivision, "subgroup index");
  return big / small;
}

}  // namespace

CycElem x2_odd_first_component(const FamilyCharacter& chi, int64_t r, long long cap) {
  const auto& ring = chi.ring();
  const AddChar e(ring, r, chi.field());
  PhaseSum sum(chi.field());
  chi.N_next().for_each(
      [&](const Mat2& x) { sum.add(chi.mu().phase(det(x, ring)) + chi.phi_phase(x) + e.phase(trace(x, ring))); }, cap);
  return sum.value();
}

GaussValue tau_oracle_subgroup(const FamilyCharacter& chi, int64_t r, long long cap) {
  const auto& ring = chi.ring();
  const auto& field = chi.field();
  const AddChar e(ring, r, field);
  const int64_t G = group_order(ring);
  if (!chi.virtual_psi()) {
    const auto& H = chi.stabilizer();
    PhaseSum sum(field);
    H.for_each([&](const Mat2& x) { sum.add(chi.mu().phase(det(x, ring)) + chi.psi_phase(x) + e.phase(trace(x, ring))); },
               cap);
    return with_embedding(sum.value() * exact_index(G, H.order()));
  }
  const CycElem first = x2_odd_first_component(chi, r, cap);
  PhaseSum second(field);
  chi.L().for_each(
      [&](const Mat2& x) { second.add(chi.mu().phase(det(x, ring)) + chi.phi_phase(x) + e.phase(trace(x, ring))); }, cap);
  const int64_t idx_n = exact_index(exact_index(G, chi.N_next().order()), ring.p());
  const int64_t idx_l = exact_index(G, chi.L().order());
  return with_embedding(first * idx_n - second.value() * idx_l);
}

GaussValue tau_oracle_full(const FamilyCharacter& chi, int64_t r, long long cap) {
  const auto& ring = chi.ring();
  const AddChar e(ring, r, chi.field());
  PhaseSum sum(chi.field());
  Subgroup::full(ring).for_each([&](const Mat2& X) { sum.add(chi.chi(X), e.phase(trace(X, ring))); }, cap);
  return with_embedding(sum.value());
}

Theta theta_from_spec(const RingParams& ring, const CharSpec& spec) {
  if (ring.l() < 3) fail(Errc::BadArgument, "library theta needs level l-1 >= 2");
  const RingParams lower = RingParams::make(ring.p(), ring.l() - 1);
  auto chi = std::make_shared<const FamilyCharacter>(lower, spec, session_field(ring));
  const int64_t q = lower.modulus();
  return Theta{[chi, q](const Mat2& X) { return chi->chi(reduce_mod(X, q)); }, spec};
}

X4Result tau_X4(const RingParams& ring, int64_t twist, const Theta& theta, int64_t r, long long cap) {
  const int64_t p = ring.p();
  const auto field = session_field(ring);
  if (twist < 0 || twist >= p) fail(Errc::BadArgument, "twist must lie in [0, p)");
  r = ring.reduce(r);
  if (r == 0) fail(Errc::BadArgument, "additive character must be nontrivial");
  const bool p_divides_r = r % p == 0;
  if ((twist >= 1 && p_divides_r) || (twist == 0 && !p_divides_r)) {
    return {X4Result::Kind::Zero, with_embedding(CycElem(field)), "vanishing"};
  }
  const int64_t p4 = p * p * p * p;
  const RingParams lower = RingParams::make(p, ring.l() - 1);
  if (twist == 0) {
    const int64_t r_low = r / p;
    if (theta.spec && lower.l() >= 2) {
      const FamilyCharacter chi(lower, *theta.spec, field);
      return {X4Result::Kind::Recursion, with_embedding(tau_closed(chi, r_low).exact * p4), "recursion-closed"};
    }
    PhaseSum sum(field);
    Subgroup::full(lower).for_each(
        [&](const Mat2& X) { sum.add(theta.values(X), field->phase(lower.modulus(), r_low * trace(X, lower))); }, cap);
    return {X4Result::Kind::Recursion, with_embedding(sum.value() * p4), "recursion-brute"};
  }
  // Residual sum over lifts in [0, p^{l-1}).
  const int64_t ql = lower.modulus();
  const int64_t count = ipow(ql / p, 4);
  if (count > cap) fail(Errc::TooLarge, "residual sum has " + std::to_string(count) + " terms");
  const MultChar nu0 = make_nu0(ring, field);
  const AddChar e(ring, r, field);
  const int64_t a0 = mod(-twist * inv_mod(r, p), p);
  PhaseSum sum(field);
  for (int64_t a = a0; a < ql; a += p)
    for (int64_t d = a0; d < ql; d += p)
      for (int64_t b = 0; b < ql; b += p)
        for (int64_t c = 0; c < ql; c += p) {
          const Mat2 X{a, b, c, d};
          sum.add(theta.values(X), twist * nu0.phase(det(X, ring)) + e.phase(a + d));
        }
  return {X4Result::Kind::Residual, with_embedding(sum.value() * p4), "residual-sum"};
}

GaussValue tau_X4_brute(const RingParams& ring, int64_t twist, const Theta& theta, int64_t r, long long cap) {
  const auto field = session_field(ring);
  const MultChar nu0 = make_nu0(ring, field);
  const AddChar e(ring, r, field);
  PhaseSum sum(field);
  Subgroup::full(ring).for_each(
      [&](const Mat2& X) { sum.add(theta.values(X), twist * nu0.phase(det(X, ring)) + e.phase(trace(X, ring))); }, cap);
  return with_embedding(sum.value());
}

}  // namespace gl2gauss
