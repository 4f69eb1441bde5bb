#include <doctest.h>

#include <set>

#include "gl2gauss/group.hpp"

using namespace gl2gauss;

namespace {

// Literal count over all 4-tuples.
int64_t count_units(const RingParams& ring, const std::function<bool(const Mat2&)>& keep) {
  const int64_t q = ring.modulus();
  int64_t n = 0;
  for (int64_t a = 0; a < q; ++a)
    for (int64_t b = 0; b < q; ++b)
      for (int64_t c = 0; c < q; ++c)
        for (int64_t d = 0; d < q; ++d) {
          const Mat2 x{a, b, c, d};
          if (ring.is_unit(det(x, ring)) && keep(x)) ++n;
        }
  return n;
}

void check_closed(const Subgroup& H) {
  const auto& ring = H.ring();
  const auto elems = H.elements();
  CHECK(static_cast<int64_t>(elems.size()) == H.order());
  std::set<uint64_t> keys;
  for (const auto& x : elems) keys.insert(encode(x, ring.modulus()));
  CHECK(keys.size() == elems.size());
  for (size_t s = 0; s < elems.size(); s += 1 + elems.size() / 40)
    for (size_t t = 0; t < elems.size(); t += 1 + elems.size() / 40) {
      CHECK(H.contains(mat_mul(elems[s], elems[t], ring)));
    }
  for (const auto& x : elems) CHECK(H.contains(mat_inv(x, ring)));
}

std::vector<Subgroup> all_shapes(const RingParams& ring) {
  std::vector<Subgroup> out{Subgroup::full(ring),        Subgroup::congruence(ring, 1),
                            Subgroup::congruence(ring, ring.l() - 1), Subgroup::center(ring),
                            Subgroup::split_torus(ring), Subgroup::split_T(ring),
                            Subgroup::split_T0(ring),    Subgroup::split_N(ring),
                            Subgroup::torus(ring, 2),    Subgroup::torus_times_K(ring, 2, ring.m()),
                            Subgroup::torus_N(ring, 2, ring.n()), Subgroup::ramified_N(ring),
                            Subgroup::ramified_T0(ring, 0)};
  return out;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("group orders") {
    CHECK(group_order(RingParams::make(3, 2)) == 3888);
    CHECK(group_order(RingParams::make(3, 1)) == 48);
    CHECK(group_order(RingParams::make(5, 2)) == 300000);
    CHECK(Subgroup::full(RingParams::make(3, 1)).elements().size() == 48);
    CHECK(Subgroup::full(RingParams::make(3, 2)).elements().size() == 3888);
  }

  TEST_CASE("named subgroups at (3,2)") {
    const auto ring = RingParams::make(3, 2);
    CHECK(Subgroup::congruence(ring, 1).order() == 81);
    CHECK(Subgroup::split_torus(ring).order() == 36);
    CHECK(Subgroup::split_T0(ring).order() ==
          count_units(ring, [](const Mat2& x) { return x.b % 3 == 0 && x.c % 3 == 0; }));
    CHECK(Subgroup::torus(ring, 2).order() == 72);
  }

  TEST_CASE("orders agree with a literal count") {
    const auto ring = RingParams::make(3, 2);
    for (const auto& H : all_shapes(ring)) {
      CAPTURE(H.name());
      CHECK(H.order() == count_units(ring, [&](const Mat2& x) { return H.contains(x); }));
    }
  }

  TEST_CASE("subgroups are closed") {
    for (int l : {2, 3}) {
      const auto ring = RingParams::make(3, l);
      for (const auto& H : all_shapes(ring)) {
        if (H.order() > 50000) continue;
        CAPTURE(H.name());
        check_closed(H);
      }
    }
  }

  TEST_CASE("congruence subgroups are normal") {
    const auto ring = RingParams::make(3, 2);
    const auto K = Subgroup::congruence(ring, 1);
    const auto G = Subgroup::full(ring).elements();
    for (size_t t = 0; t < G.size(); t += 97) {
      K.for_each([&](const Mat2& k) {
        CHECK(K.contains(mat_mul(mat_mul(G[t], k, ring), mat_inv(G[t], ring), ring)));
      });
    }
  }

  TEST_CASE("cap") {
    const auto ring = RingParams::make(3, 2);
    CHECK_THROWS_AS(Subgroup::full(ring).for_each([](const Mat2&) {}, 100), Error);
  }

  TEST_CASE("right transversal") {
    const auto ring = RingParams::make(3, 2);
    const auto H = Subgroup::split_T0(ring);
    const auto G = Subgroup::full(ring);
    const auto reps = right_transversal(H, G);
    CHECK(static_cast<int64_t>(reps.size()) * H.order() == G.order());
    for (size_t s = 0; s < reps.size(); ++s)
      for (size_t t = s + 1; t < reps.size(); ++t) {
        CHECK_FALSE(H.contains(mat_mul(reps[s], mat_inv(reps[t], ring), ring)));
      }
  }

  TEST_CASE("nonsplit torus") {
    for (int l : {2, 3}) {
      const auto ring = RingParams::make(3, l);
      const NonsplitTorus T(ring, 2);
      const auto& reps = T.reps();
      const int64_t expected = ring.pow_p(2 * (ring.n() - 1)) * 8;
      CHECK(static_cast<int64_t>(reps.size()) == expected);
      const auto S = Subgroup::torus(ring, 2);
      std::set<uint64_t> keys;
      for (size_t t = 0; t < reps.size(); ++t) {
        CHECK(S.contains(reps.rep(t)));
        keys.insert(encode(reps.rep(t), ring.modulus()));
      }
      CHECK(keys.size() == reps.size());
      const Mat2 s3 = reps.s3();
      int64_t order = 1;
      for (Mat2 x = s3; !(x == identity()); x = mat_mul(x, s3, ring)) ++order;
      CHECK(order == 8);
      const Mat2 s34 = mat_pow(s3, 4, ring);
      CHECK(s34.b == 0);
      CHECK(s34.c == 0);
      CHECK(s34.a == s34.d);
    }
  }

  TEST_CASE("K_1 cap S and K_n cap S are generated by s1, s2") {
    for (int l : {2, 3}) {
      const auto ring = RingParams::make(3, l);
      const NonsplitTorus T(ring, 2);
      const auto S = Subgroup::torus(ring, 2);
      for (int level : {1, ring.n()}) {
        const auto K = Subgroup::congruence(ring, level);
        std::set<uint64_t> lhs, rhs;
        S.for_each([&](const Mat2& x) {
          if (K.contains(x)) lhs.insert(encode(x, ring.modulus()));
        });
        const int64_t step = ring.pow_p(level - 1);
        const Mat2 a = mat_pow(T.reps().s1(), step, ring), b = mat_pow(T.reps().s2(), step, ring);
        const int64_t top = ring.pow_p(l - level);
        for (int64_t i = 0; i < top; ++i)
          for (int64_t j = 0; j < top; ++j)
            rhs.insert(encode(mat_mul(mat_pow(a, i, ring), mat_pow(b, j, ring), ring), ring.modulus()));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("ramified torus") {
    for (auto [p, l] : {std::pair{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}}) {
      const auto ring = RingParams::make(p, l);
      for (int64_t beta = 0; beta < ring.pow_p(ring.m() - 1); ++beta) {
        const RamifiedTorus T(ring, beta);
        const auto& reps = T.reps();
        const int64_t m = ring.m();
        CHECK(static_cast<int64_t>(reps.size()) == ring.pow_p(2 * m - 2) * (p - 1) * p);
        const Mat2 lhs = mat_pow(reps.s3(), p, ring);
        const Mat2 rhs = mat_mul(mat_pow(reps.s1(), T.sigma1(), ring), mat_pow(reps.s2(), T.sigma2(), ring), ring);
        CHECK(lhs == rhs);
        const auto T0 = Subgroup::ramified_T0(ring, beta);
        for (size_t t = 0; t < reps.size(); ++t) CHECK(T0.contains(reps.rep(t)));
      }
    }
  }

  TEST_CASE("find_h") {
    const auto ring = RingParams::make(3, 2);
    const NonsplitTorus T(ring, 2);
    for (int64_t r : {1, 2, 4, 5, 7, 8}) {
      const Mat2 x = h_target(0, 2, r, ring);
      int hits = 0;
      for (size_t t = 0; t < T.reps().size(); ++t) {
        if (reduce_mod(T.reps().rep(t), 3) == reduce_mod(x, 3)) ++hits;
      }
      CHECK(hits == 1);
      const OmegaIndex h = find_h(T.reps(), x, ring);
      CHECK(reduce_mod(T.reps().power(h), 3) == reduce_mod(x, 3));
    }
    CHECK_THROWS_AS(h_target(0, 2, 3, ring), Error);
  }

  TEST_CASE("delta") {
    const auto ring = RingParams::make(3, 2);
    CHECK(binomial_delta(2, 0, 1, ring) == 4);
    CHECK(NonsplitTorus(ring, 2).delta() % 3 == 1);
    CHECK(binomial_delta(0, 0, 1, ring) == 0);
    CHECK(RamifiedTorus(ring, 0).delta() == 0);
    for (int l : {2, 3, 4, 5}) {
      const auto r3 = RingParams::make(3, l);
      CHECK(r3.is_unit(NonsplitTorus(r3, 2).delta()));
      const auto r5 = RingParams::make(5, l);
      for (int64_t eps : {2, 3}) CHECK(r5.is_unit(NonsplitTorus(r5, eps).delta()));
    }
    CHECK_THROWS_AS(binomial_delta(1, 1, 5, RingParams::make(3, 3)), Error);
  }
}
