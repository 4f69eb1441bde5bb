#include <doctest.h>

#include <cmath>
#include <random>

#include "gl2gauss/cyclotomic.hpp"
#include "gl2gauss/error.hpp"
#include "gl2gauss/residue.hpp"

using namespace gl2gauss;

namespace {

CycElem random_elem(const FieldPtr& field, std::mt19937& rng) {
  std::uniform_int_distribution<int64_t> coef(-1000, 1000);
  std::vector<int64_t> c(static_cast<size_t>(field->conductor()));
  for (auto& x : c) x = coef(rng);
  return CycElem(field, c);
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(CyclotomicField::get(1)->cyclotomic_polynomial() == std::vector<int64_t>{-1, 1});
    CHECK(CyclotomicField::get(4)->cyclotomic_polynomial() == std::vector<int64_t>{1, 0, 1});
    CHECK(CyclotomicField::get(9)->cyclotomic_polynomial() == std::vector<int64_t>{1, 0, 0, 1, 0, 0, 1});
    CHECK(CyclotomicField::get(12)->cyclotomic_polynomial() == std::vector<int64_t>{1, 0, -1, 0, 1});
    CHECK(CyclotomicField::get(72)->degree() == 24);
    // Phi_105 is the first with a coefficient of absolute value 2.
    const auto& phi105 = CyclotomicField::get(105)->cyclotomic_polynomial();
    CHECK(phi105.size() == 49);
    CHECK(phi105[7] == -2);
  }

  TEST_CASE("session conductor") {
    CHECK(session_conductor(RingParams::make(3, 2)) == 72);
    CHECK(session_conductor(RingParams::make(5, 2)) == 600);
    CHECK(session_conductor(RingParams::make(3, 3)) == 216);
  }

  TEST_CASE("roots of unity") {
    const FieldPtr F = CyclotomicField::get(72);
    CHECK(root_of_unity(F, 1, 0) == CycElem::integer(F, 1));
    CHECK(root_of_unity(F, 3, 1) + root_of_unity(F, 3, 2) == CycElem::integer(F, -1));
    CHECK(root_of_unity(F, 4, 1) * root_of_unity(F, 4, 1) == CycElem::integer(F, -1));
    CHECK_THROWS_AS(root_of_unity(F, 5, 1), Error);
    for (int64_t k : {2, 3, 4, 6, 8, 9, 12, 18, 24, 36, 72}) {
      CycElem sum(F);
      for (int64_t a = 0; a < k; ++a) {
        sum += root_of_unity(F, k, a);
        CHECK(root_of_unity(F, k, a).pow(static_cast<unsigned>(k)) == CycElem::integer(F, 1));
      }
      CHECK(sum.is_zero());
    }
  }

  TEST_CASE("complex embedding") {
    const FieldPtr F = CyclotomicField::get(72);
    const auto i = embed_complex(root_of_unity(F, 4, 1));
    CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-12);
    const auto w = embed_complex(CycElem::integer(F, 1) + root_of_unity(F, 3, 1));
    CHECK(std::abs(w - std::complex<double>(0.5, std::sqrt(3.0) / 2)) < 1e-12);
    CHECK(std::abs(std::abs(embed_complex(root_of_unity(F, 9, 1) * 3)) - 3) < 1e-12);
  }

  TEST_CASE("square root of p") {
    const FieldPtr F5 = CyclotomicField::get(300);
    const CycElem s5 = sqrt_p(F5, 5);
    CHECK(s5 == CycElem::integer(F5, 1) + (root_of_unity(F5, 5, 1) + root_of_unity(F5, 5, 4)) * 2);
    CHECK(std::abs(embed_complex(s5).real() - std::sqrt(5.0)) < 1e-12);
    const FieldPtr F3 = CyclotomicField::get(72);
    const CycElem s3 = sqrt_p(F3, 3);
    CHECK(s3 == (CycElem::integer(F3, 1) + root_of_unity(F3, 3, 1) * 2) * root_of_unity(F3, 4, -1));
    CHECK(std::abs(embed_complex(s3) - std::complex<double>(std::sqrt(3.0), 0)) < 1e-12);
    for (int64_t p : {3, 5, 7, 11}) {
      const FieldPtr F = CyclotomicField::get(4 * p);
      CHECK(sqrt_p(F, p) * sqrt_p(F, p) == CycElem::integer(F, p));
    }
  }

  TEST_CASE("ring axioms and canonical form") {
    const FieldPtr F = CyclotomicField::get(36);
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
      const CycElem a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(CycElem(F, std::vector<int64_t>(a.coeffs().begin(), a.coeffs().end())) == a);
      const auto za = embed_complex(a), zb = embed_complex(b);
      CHECK(std::abs(embed_complex(a * b) - za * zb) < 1e-9 * std::abs(za * zb) + 1e-9);
      CHECK(std::abs(embed_complex(a + b) - (za + zb)) < 1e-9);
      CHECK(std::abs(embed_complex(a.conj()) - std::conj(za)) < 1e-9);
    }
  }

  TEST_CASE("exact division and lifting") {
    const FieldPtr F = CyclotomicField::get(72);
    const CycElem x = root_of_unity(F, 9, 2) * 6 + root_of_unity(F, 8, 1) * 3;
    CHECK(x.exact_div(3) == root_of_unity(F, 9, 2) * 2 + root_of_unity(F, 8, 1));
    CHECK_THROWS_AS(x.exact_div(2), Error);
    const FieldPtr G = CyclotomicField::get(216);
    CHECK(root_of_unity(F, 9, 4).lift_to(G) == root_of_unity(G, 9, 4));
    CHECK(x.lift_to(G).exact_div(3).lift_to(G) == x.lift_to(G).exact_div(3));
    CHECK(CycElem::integer(F, 5).as_integer() == 5);
    CHECK_FALSE(root_of_unity(F, 3, 1).as_integer().has_value());
  }

  TEST_CASE("phase sums") {
    const FieldPtr F = CyclotomicField::get(72);
    PhaseSum sum(F);
    for (int64_t a = 0; a < 72; a += 8) sum.add(a);
    CHECK(sum.value().is_zero());
    sum.clear();
    sum.add(-72 + 8, 2);
    sum.add(root_of_unity(F, 4, 1), 18);
    CHECK(sum.value() == root_of_unity(F, 9, 1) * 2 + root_of_unity(F, 2, 1));
  }

  TEST_CASE("overflow is reported") {
    const FieldPtr F = CyclotomicField::get(4);
    const CycElem big = CycElem::integer(F, int64_t{1} << 40);
    CHECK_THROWS_AS(big * big, Error);
  }
}
