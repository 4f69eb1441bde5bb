#include <doctest.h>

#include "gl2gauss/padic.hpp"
#include "gl2gauss/residue.hpp"

using namespace gl2gauss;

TEST_SUITE("padic") {
  TEST_CASE("logarithm of principal units") {
    CHECK(padic_log_unit({3, 2, 4}).value == 3);
    CHECK(padic_log_unit({5, 6, 1}).value == 0);
    CHECK(padic_log_unit({3, 3, 4}).value % 9 == 3);
  }

  TEST_CASE("log is a homomorphism") {
    for (int64_t p : {3, 5, 7}) {
      const int prec = 8;
      const int64_t q = ipow(p, prec);
      for (int64_t x = 1; x < 200; x += p) {
        for (int64_t y = 1; y < 200; y += p * 3) {
          const int64_t xy = mul_mod(x, y, q);
          const int64_t lhs = padic_log_unit({p, prec, xy}).value;
          const int64_t rhs = mod(padic_log_unit({p, prec, x}).value + padic_log_unit({p, prec, y}).value, q);
          CHECK(lhs == rhs);
        }
      }
    }
  }

  TEST_CASE("higher precision keeps lower digits") {
    for (int64_t u : {4, 7, 10, 28, 55}) {
      const int64_t low = padic_log_unit({3, 5, u}).value;
      CHECK(padic_log_unit({3, 9, u}).value % ipow(3, 5) == low);
    }
  }

  TEST_CASE("sigma is 1 mod p") {
    for (auto [p, l] : {std::pair{3, 2}, {3, 4}, {3, 5}, {5, 2}, {5, 4}, {7, 3}}) {
      const int64_t s = odoni_sigma(RingParams::make(p, l));
      CHECK(s % p == 1);
      CHECK(s < ipow(p, l));
    }
  }
}
