#include <doctest.h>

#include "gl2gauss/characters.hpp"

using namespace gl2gauss;

TEST_SUITE("characters") {
  TEST_CASE("additive character") {
    const auto ring = RingParams::make(3, 2);
    const auto F = session_field(ring);
    CHECK(AddChar(ring, 1, F).eval(0) == CycElem::integer(F, 1));
    CHECK(AddChar(ring, 1, F).eval(1) == root_of_unity(F, 9, 1));
    CHECK(AddChar(ring, 3, F).eval(3) == CycElem::integer(F, 1));
    CHECK_THROWS_AS(AddChar(ring, 9, F), Error);
  }

  TEST_CASE("mu_alpha") {
    const auto ring = RingParams::make(3, 2);
    const auto F = session_field(ring);
    CHECK(make_mu_alpha(0, ring, F).is_trivial());
    const MultChar mu = make_mu_alpha(1, ring, F);
    CHECK(mu.eval(4) == root_of_unity(F, 3, 1));
    for (int64_t x = 1; x < 9; ++x)
      for (int64_t y = 1; y < 9; ++y) {
        if (x % 3 == 0 || y % 3 == 0) continue;
        CHECK(mu.eval(x * y % 9) == mu.eval(x) * mu.eval(y));
      }
    for (auto [p, l] : {std::pair{3, 3}, {5, 2}, {5, 4}, {7, 3}}) {
      const auto r = RingParams::make(p, l);
      const auto G = session_field(r);
      const AddChar lambda(r, 1, G);
      for (int64_t alpha = 0; alpha < r.pow_p(r.m()); ++alpha) {
        const MultChar m = make_mu_alpha(alpha, r, G);
        for (int64_t z = 0; z < r.pow_p(r.m()); ++z) {
          const int64_t x = r.add(1, r.pow_p(r.n()) * z);
          CHECK(m.eval(x) == lambda.eval(r.mul(r.pow_p(r.n()) * alpha, z)));
        }
      }
    }
  }

  TEST_CASE("lambda' and nu0") {
    for (auto [p, l] : {std::pair{3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
      const auto r = RingParams::make(p, l);
      const auto F = session_field(r);
      const AddChar lambda(r, 1, F);
      for (int64_t u = 1; 2 * u <= r.pow_p(r.m()) - 1; ++u) {
        if (u % p == 0) continue;
        const MultChar lp = make_lambda_prime(u, r, F);
        CHECK(gcd(lp.exponent(), r.unit_order()) == 1);
        for (int64_t z = 0; z < r.pow_p(r.m()); ++z) {
          const int64_t x = r.add(1, r.pow_p(r.n()) * z);
          CHECK(lp.eval(x) == lambda.eval(r.mul(r.pow_p(r.n()) * u, z)));
        }
      }
      const MultChar nu = make_nu0(r, F);
      CHECK(gcd(nu.exponent(), r.unit_order()) == 1);
      CHECK(nu.eval(1 + r.pow_p(l - 1)) == root_of_unity(F, p, 1));
    }
  }

  TEST_CASE("conductor levels") {
    const auto ring = RingParams::make(3, 3);
    const auto F = session_field(ring);
    CHECK(MultChar(ring, 0, F).conductor_level() == 0);
    CHECK(MultChar(ring, 9, F).conductor_level() == 1);
    CHECK(MultChar(ring, 3, F).conductor_level() == 2);
    CHECK(MultChar(ring, 1, F).conductor_level() == 3);
    CHECK(MultChar(ring, 3, F).factors_through(2));
    CHECK_FALSE(MultChar(ring, 3, F).factors_through(1));
  }

  TEST_CASE("phi_A") {
    const auto ring = RingParams::make(3, 2);
    const auto F = session_field(ring);
    const Mat2 A{1, 0, 0, 0};
    CHECK(eval_phi_A(A, identity(), ring, F) == CycElem::integer(F, 1));
    CHECK(eval_phi_A(A, Mat2{4, 0, 0, 1}, ring, F) == root_of_unity(F, 3, 1));
    CHECK_THROWS_AS(eval_phi_A(A, Mat2{2, 0, 0, 1}, ring, F), Error);
    const auto K = Subgroup::congruence(ring, ring.n()).elements();
    for (const Mat2& B : {A, Mat2{0, 2, 1, 0}, Mat2{2, 1, 1, 1}})
      for (const auto& x : K)
        for (const auto& y : K) {
          CHECK(eval_phi_A(B, mat_mul(x, y, ring), ring, F) == eval_phi_A(B, x, ring, F) * eval_phi_A(B, y, ring, F));
        }
  }

  TEST_CASE("linear psi are homomorphisms restricting to phi_A0") {
    for (int l : {2, 3}) {
      const auto ring = RingParams::make(3, l);
      for (Family fam : {Family::X1, Family::X2, Family::X3}) {
        const auto specs = enumerate_specs(fam, ring);
        for (size_t t = 0; t < specs.size(); t += specs.size() / 4 + 1) {
          const FamilyCharacter chi(ring, specs[t]);
          if (chi.virtual_psi()) continue;
          CAPTURE(describe(specs[t]));
          const auto H = chi.stabilizer().elements();
          CHECK(chi.psi(identity()) == CycElem::integer(chi.field(), 1));
          const size_t step = l == 2 ? 1 : 1 + H.size() / 60;
          for (size_t a = 0; a < H.size(); a += step)
            for (size_t b = 0; b < H.size(); b += step) {
              CHECK(chi.psi_phase(mat_mul(H[a], H[b], ring)) ==
                    mod(chi.psi_phase(H[a]) + chi.psi_phase(H[b]), chi.field()->conductor()));
            }
          const Mat2 A0 = family_A0(specs[t], ring);
          Subgroup::congruence(ring, ring.n()).for_each([&](const Mat2& x) {
            CHECK(chi.psi(x) == eval_phi_A(A0, x, ring, chi.field()));
          });
        }
      }
    }
  }

  TEST_CASE("X1 psi by its defining formula") {
    const auto ring = RingParams::make(3, 2);
    CharSpec s;
    s.family = Family::X1;
    const FamilyCharacter chi(ring, s);
    const MultChar& lp = chi.lambda_prime();
    int checked = 0;
    chi.stabilizer().for_each([&](const Mat2& x) {
      if (checked++ % 7 == 0) CHECK(chi.psi(x) == lp.eval(x.a));
    });
  }

  TEST_CASE("the stabilizer fixes phi_A0 and nothing larger does") {
    const auto ring = RingParams::make(3, 2);
    const auto G = Subgroup::full(ring).elements();
    const auto K = Subgroup::congruence(ring, ring.n()).elements();
    for (Family fam : {Family::X1, Family::X2, Family::X3}) {
      const CharSpec s = enumerate_specs(fam, ring).front();
      const FamilyCharacter chi(ring, s);
      const Mat2 A0 = family_A0(s, ring);
      const auto& F = chi.field();
      for (size_t t = 0; t < G.size(); t += 13) {
        const Mat2 g = G[t], gi = mat_inv(g, ring);
        bool fixes = true;
        for (const auto& x : K) {
          if (!(eval_phi_A(A0, mat_mul(mat_mul(g, x, ring), gi, ring), ring, F) == eval_phi_A(A0, x, ring, F))) {
            fixes = false;
            break;
          }
        }
        CHECK(fixes == chi.stabilizer().contains(g));
      }
    }
  }

  TEST_CASE("degrees, inductions and inner products at (3,2)") {
    const auto ring = RingParams::make(3, 2);
    const auto G = Subgroup::full(ring);
    const int64_t degrees[] = {12, 6, 8};
    int t = 0;
    for (Family fam : {Family::X1, Family::X2, Family::X3}) {
      const FamilyCharacter chi(ring, enumerate_specs(fam, ring).back());
      CHECK(chi.chi(identity()) == CycElem::integer(chi.field(), degrees[t++]));
      const ClassFunction psi = [&chi](const Mat2& x) { return chi.psi(x); };
      CHECK(inner_product(psi, psi, chi.stabilizer(), chi.field()) == CycElem::integer(chi.field(), 1));
      const auto elems = G.elements();
      for (size_t s = 0; s < elems.size(); s += 389) {
        const CycElem brute = induced_value_brute(chi.stabilizer(), psi, elems[s], G, chi.field());
        const CycElem fast = chi.chi(elems[s]).shifted(-chi.mu().phase(det(elems[s], ring)));
        CHECK(brute == fast);
      }
    }
  }

  TEST_CASE("an element outside every conjugate of T0 induces 0") {
    const auto ring = RingParams::make(3, 2);
    CharSpec s;
    s.family = Family::X1;
    const FamilyCharacter chi(ring, s);
    // Irreducible characteristic polynomial x^2 + 1 mod 3: no conjugate is triangular mod 3.
    CHECK(chi.chi(Mat2{0, 8, 1, 0}).is_zero());
  }

  TEST_CASE("twist by alpha multiplies by mu o det") {
    const auto ring = RingParams::make(3, 2);
    const auto G = Subgroup::full(ring).elements();
    for (Family fam : {Family::X1, Family::X2, Family::X3}) {
      CharSpec a = enumerate_specs(fam, ring).front(), b = a;
      b.alpha = 2;
      const FamilyCharacter ca(ring, a), cb(ring, b);
      for (size_t t = 0; t < G.size(); t += 31) {
        const int64_t d = det(G[t], ring);
        CHECK(cb.chi(G[t]) == ca.chi(G[t]).shifted(cb.mu().phase(d) - ca.mu().phase(d)));
      }
      // psi itself does not depend on alpha
      for (const auto& x : ca.stabilizer().elements()) {
        if (ca.virtual_psi()) break;
        CHECK(ca.psi_phase(x) == cb.psi_phase(x));
      }
    }
  }

  TEST_CASE("X3 with even l has a single (i1, i2)") {
    const auto ring = RingParams::make(3, 4);
    for (const auto& s : enumerate_specs(Family::X3, ring)) {
      CHECK(s.i1 == 0);
      CHECK(s.i2 == 0);
    }
    CharSpec s;
    s.family = Family::X3;
    s.i1 = 1;
    CHECK_THROWS_AS(validate(s, ring), Error);
  }

  TEST_CASE("spec validation") {
    const auto ring = RingParams::make(3, 2);
    CharSpec s;
    s.family = Family::X2;
    s.eps = 1;
    CHECK_THROWS_AS(validate(s, ring), Error);
    s.eps = 2;
    s.omega = {0, 0, 8};
    CHECK_THROWS_AS(validate(s, ring), Error);
    s.omega = {0, 0, 7};
    CHECK_NOTHROW(validate(s, ring));
    CHECK(parse_family("x2") == Family::X2);
    CHECK_FALSE(parse_family("x9").has_value());
  }
}
