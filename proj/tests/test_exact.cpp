#include <doctest.h>

#include <cmath>
#include <random>

#include "gps/exact.hpp"
#include "test_support.hpp"

using namespace gps;
using gps::test::rat;
using gps::test::sqrt3;

TEST_SUITE("exact") {

TEST_CASE("multiplication rule") {
  // (1/2) * sqrt(3) = (1/2) sqrt(3)
  CHECK(rat(1, 2) * sqrt3(1) == sqrt3(1, 2));
  // (a + b sqrt3)(a' + b' sqrt3)
  ExactScalar x(make_rat(1, 2), make_rat(1, 3));
  ExactScalar y(make_rat(2, 1), make_rat(-1, 2));
  ExactScalar expected(make_rat(1, 2) * 2 + BigRat(3) * make_rat(1, 3) * make_rat(-1, 2),
                       make_rat(1, 2) * make_rat(-1, 2) + make_rat(1, 3) * 2);
  CHECK(x * y == expected);
}

TEST_CASE("division rationalizes") {
  // 1 / (1 + sqrt3) = (sqrt3 - 1) / 2
  ExactScalar q = rat(1) / (rat(1) + sqrt3(1));
  CHECK(q == ExactScalar(make_rat(-1, 2), make_rat(1, 2)));
  CHECK(rat(2, 3) + rat(1, 3) == rat(1));
}

TEST_CASE("division by zero reported") {
  CHECK_THROWS_AS(rat(1) / rat(0), ExactError);
  CHECK_THROWS_AS(rat(1) / ExactScalar(), ExactError);
}

TEST_CASE("to_float examples") {
  CHECK(rat(1, 2).to_double() == 0.5);
  CHECK(sqrt3(1, 2).to_double() == doctest::Approx(0.8660254037844386).epsilon(1e-15));
  CHECK(ExactScalar().to_double() == 0.0);
}

TEST_CASE("to_float multiplicativity within 4 ulp") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    ExactScalar a(gps::test::random_rational(rng).rational(),
                  gps::test::random_rational(rng).rational());
    ExactScalar b(gps::test::random_rational(rng).rational(),
                  gps::test::random_rational(rng).rational());
    double lhs = (a * b).to_double();
    double rhs = a.to_double() * b.to_double();
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    CHECK(std::abs(lhs - rhs) <= 4 * std::ldexp(1.0, std::ilogb(scale) - 52));
  }
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    ExactScalar a(gps::test::random_rational(rng).rational(),
                  gps::test::random_rational(rng).rational());
    ExactScalar b(gps::test::random_rational(rng).rational(),
                  gps::test::random_rational(rng).rational());
    ExactScalar c(gps::test::random_rational(rng).rational(),
                  gps::test::random_rational(rng).rational());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == ExactScalar());
    if (!a.is_zero()) CHECK(a / a == rat(1));
  }
}

TEST_CASE("canonical form is unique") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-4, -6) == rat(2, 3));
  CHECK((rat(2, 3) + rat(1, 3)).rational() == BigRat(1));
  CHECK((sqrt3(1) * sqrt3(1)) == rat(3));  // radical part folds back exactly
}

TEST_CASE("exact sign") {
  CHECK(rat(-1, 7).sign() == -1);
  CHECK(ExactScalar().sign() == 0);
  // 2 - sqrt(3) > 0, 3/2 - sqrt(3) < 0 (sqrt(3) ~ 1.732)
  CHECK(ExactScalar(BigRat(2), BigRat(-1)).sign() == 1);
  CHECK(ExactScalar(make_rat(3, 2), BigRat(-1)).sign() == -1);
}

TEST_CASE("text form round-trips") {
  for (const char* text : {"0", "-1/2", "3/4*sqrt(3)", "1/2+1/6*sqrt(3)", "-2-1/3*sqrt(3)", "7"}) {
    ExactScalar v = ExactScalar::parse(text);
    CHECK(ExactScalar::parse(v.str()) == v);
  }
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    ExactScalar v(gps::test::random_rational(rng).rational(),
                  gps::test::random_rational(rng).rational());
    CHECK(ExactScalar::parse(v.str()) == v);
  }
  CHECK_THROWS_AS(ExactScalar::parse("1/0"), ExactError);
  CHECK_THROWS_AS(ExactScalar::parse("sqrt(3)"), ExactError);
  CHECK_THROWS_AS(ExactScalar::parse("1*sqrt(5)"), ExactError);
  CHECK_THROWS_AS(ExactScalar::parse(""), ExactError);
}

TEST_CASE("radicand is validated") {
  CHECK(radicand() == 3);
  CHECK_THROWS_AS(set_radicand(4), ExactError);
  CHECK_THROWS_AS(set_radicand(12), ExactError);
  CHECK_THROWS_AS(set_radicand(1), ExactError);
}

TEST_CASE("complex extension") {
  ExactComplex i = ExactComplex::i();
  CHECK(i * i == ExactComplex(rat(-1)));
  ExactComplex z(rat(1, 2), sqrt3(1, 2));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
  CHECK(z.norm2() == rat(1, 4) + rat(3, 4));
}

}  // TEST_SUITE
