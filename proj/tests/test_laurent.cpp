#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>
#include <stdexcept>

#include "wcg/error.hpp"
#include "wcg/laurent.hpp"

using wcg::LaurentPoly;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coeff(-3, 3), count(0, 4);
  LaurentPoly p;
  for (int i = count(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("basic constructors and degrees") {
  CHECK(LaurentPoly{}.is_zero());
  CHECK(LaurentPoly{}.deg() == wcg::kDegNegInf);
  CHECK(LaurentPoly::constant(0).is_zero());
  const LaurentPoly p = LaurentPoly::v_minus_vinv(2);
  CHECK(p.deg() == 2);
  CHECK(p.low_deg() == -2);
  CHECK(p.coeff_at(2) == 1);
  CHECK(p.coeff_at(-2) == -1);
  CHECK(p.coeff_at(0) == 0);
  CHECK(LaurentPoly::monomial(3, 0).is_zero());
}

TEST_CASE("(v - v^-1)^2 = v^2 - 2 + v^-2") {
  const LaurentPoly x = LaurentPoly::v_minus_vinv(1);
  const LaurentPoly sq = x * x;
  CHECK(sq.to_string() == "1*v^2 + -2*v^0 + 1*v^-2");
  CHECK(sq == LaurentPoly::v_plus_vinv(2) - LaurentPoly::constant(2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly{});
    LaurentPoly acc = a;
    acc.add_product(b, c);
    CHECK(acc == a + b * c);
  }
}

TEST_CASE("bar is a ring involution") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    if (!a.is_zero()) CHECK(a.bar().deg() == -a.low_deg());
  }
}

TEST_CASE("parts and shifts") {
  const LaurentPoly p = LaurentPoly::parse("3*v^2 + -1*v^0 + 5*v^-3");
  CHECK(p.positive_part().to_string() == "3*v^2");
  CHECK(p.negative_part().to_string() == "5*v^-3");
  CHECK(p.positive_part() + p.negative_part() + LaurentPoly::constant(p.coeff_at(0)) == p);
  CHECK(p.shifted(-2).deg() == 0);
  CHECK(p.shifted(-2).in_Z_vinv());
  CHECK_FALSE(p.shifted(-2).in_vinv_Z_vinv());
  CHECK(p.shifted(-3).in_vinv_Z_vinv());
}

TEST_CASE("text round trip") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng);
    CHECK(LaurentPoly::parse(a.to_string()) == a);
  }
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse("1*x^2"), wcg::ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse(""), wcg::ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("1*v^"), wcg::ParseError);
}

TEST_CASE("overflow is detected, not wrapped") {
  const auto big = LaurentPoly::constant(std::numeric_limits<wcg::Coeff>::max());
  CHECK_THROWS_AS(big + LaurentPoly::constant(1), std::overflow_error);
  CHECK_THROWS_AS(big * LaurentPoly::constant(2), std::overflow_error);
}
