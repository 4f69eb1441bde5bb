#include <doctest.h>

#include <cmath>

#include "gl2gauss/appendix.hpp"
#include "gl2gauss/residue.hpp"

using namespace gl2gauss;

TEST_SUITE("appendix") {
  TEST_CASE("quadratic Gauss sums") {
    for (int64_t p : {3, 5, 7}) {
      for (int i = 1; i <= (p == 3 ? 4 : 2); ++i) {
        const FieldPtr F = appendix_field(p, i);
        const int64_t M = ipow(p, i);
        for (int64_t r = 1; r < M; r += 1 + (M > 30)) {
          if (r % p == 0) continue;
          for (int64_t d = 1; d < std::min<int64_t>(M, 12); ++d) {
            if (d % p == 0) continue;
            CHECK(quad_gauss_closed(p, i, r, d, F) == quad_gauss_brute(p, i, r, d, F));
          }
        }
        const CycElem g = quad_gauss_closed(p, i, 1, 1, F);
        const int64_t sign = (i % 2 == 1 && p % 4 == 3) ? -1 : 1;
        CHECK(g * g == CycElem::integer(F, sign * ipow(p, i)));
      }
    }
    CHECK_THROWS_AS(quad_gauss_closed(3, 1, 1, 3, appendix_field(3, 1)), Error);
  }

  TEST_CASE("Kloosterman and Salie sums") {
    const FieldPtr F3 = appendix_field(3, 3);
    CHECK(kloosterman_brute(3, 1, 1, 1, F3) == CycElem::integer(F3, -1));
    CHECK(kloosterman_closed(3, 2, 2, 1, F3).is_zero());
    CHECK(kloosterman_closed(3, 2, 1, 1, F3) == kloosterman_brute(3, 2, 1, 1, F3));
    CHECK_THROWS_AS(kloosterman_closed(3, 1, 1, 1, F3), Error);
    for (int64_t p : {3, 5, 7}) {
      for (int h = 2; h <= 3; ++h) {
        const FieldPtr F = appendix_field(p, h);
        const int64_t M = ipow(p, h);
        for (int64_t a = 1; a < M; ++a) {
          if (a % p == 0) continue;
          for (int64_t r = 1; r < std::min<int64_t>(M, 20); ++r) {
            if (r % p == 0) continue;
            const CycElem k = kloosterman_closed(p, h, a, r, F);
            CHECK(k == kloosterman_brute(p, h, a, r, F));
            CHECK(std::abs(embed_complex(k)) <= 2 * std::pow(p, h / 2.0) + 1e-9);
          }
        }
      }
    }
  }

  TEST_CASE("K' closed forms") {
    for (int64_t p : {3, 5}) {
      for (int h = 1; h <= 3; ++h) {
        const FieldPtr F = appendix_field(p, h);
        const int64_t M = ipow(p, h);
        const int j = (h % 2 == 1) ? 2 : 1;  // i = j + h odd
        for (int64_t a = 1; a < M; ++a) {
          if (a % p == 0) continue;
          for (int64_t r = 1; r < p; ++r) {
            const CycElem k = kprime_closed(p, h, j, a, r, F);
            CHECK(k == kprime_brute(p, h, a, r, F));
            if (legendre(a, p) == -1) CHECK(k.is_zero());
          }
        }
      }
    }
  }

  TEST_CASE("square roots and the u -> -u symmetry") {
    CHECK(sqrt_mod_prime_power(4, 3, 2) == 2);
    CHECK_FALSE(sqrt_mod_prime_power(2, 3, 2).has_value());
    const FieldPtr F = appendix_field(5, 3);
    for (int64_t a : {1, 4, 6, 9, 11}) {
      if (legendre(a, 5) != 1) continue;
      const int64_t u = *sqrt_mod_prime_power(a, 5, 3);
      CHECK(u * u % 125 == a % 125);
      for (int64_t r : {1, 2}) {
        // swapping u for -u leaves both closed forms unchanged
        const int64_t v = 125 - u;
        CHECK(legendre(u, 5) * legendre(-1, 5) == legendre(v, 5));
        CHECK(kloosterman_closed(5, 3, a, r, F) == kloosterman_brute(5, 3, a, r, F));
      }
    }
  }

  TEST_CASE("P case examples") {
    PSumParams q;
    q.p = 3;
    q.i = q.j = q.k = 2;
    auto res = p_sum_closed(q);
    CHECK(res.case_label == "i");
    CHECK(res.P1 == CycElem::integer(res.P1.field(), 6));
    q.i = q.j = q.k = 1;
    res = p_sum_closed(q);
    CHECK(res.P1.is_zero());
    q.i = 3;
    q.j = 1;
    q.k = 2;
    res = p_sum_closed(q);
    CHECK(res.case_label == "ii");
    CHECK(res.P1.is_zero());
    q.i = 2;
    q.j = q.k = 1;
    res = p_sum_closed(q);
    CHECK(res.case_label == "iv");
    CHECK_FALSE(res.closed_exact);
    q.i = 3;
    q.j = q.k = 1;
    CHECK(p_sum_closed(q).case_label == "v");
    q.beta = 3;
    CHECK_THROWS_AS(p_sum_closed(q), Error);
  }

  TEST_CASE("P closed against the double sum") {
    for (auto [p, imax] : {std::pair{3, 3}, {5, 2}, {7, 2}}) {
      for (int i = 1; i <= imax; ++i) {
        const int64_t M = ipow(p, i);
        for (int j = 1; j <= i; ++j)
          for (int k = 0; k <= i; ++k)
            for (int64_t beta = 1; beta < M; beta += 2)
              for (int64_t b = 1; b < M; b += 3)
                for (int64_t r = 1; r < M; r += 4) {
                  if (beta % p == 0 || b % p == 0 || r % p == 0) continue;
                  const PSumParams q{p, i, j, k, beta, b, r};
                  const CycElem brute = p_sum_brute(q);
                  CHECK(p_sum_closed(q).P == brute);
                  CHECK(p_prefactor(q) * p1_brute(q) == brute);
                }
      }
    }
  }
}
