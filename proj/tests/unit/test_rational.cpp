#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nullcert/error.hpp"
#include "nullcert/rational.hpp"
#include "oracle.hpp"

using nullcert::Rational;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Rational random_q(std::mt19937_64& rng) { return oracle::to_rational(oracle::random_rational(rng, 50)); }

}  // namespace

TEST_CASE("rat_add") {
  CHECK(nullcert::rat_add(q(0), q(3, 7)) == q(3, 7));
  CHECK(nullcert::rat_add(q(1, 2), q(-1, 2)) == q(0));
  CHECK(nullcert::rat_add(q(1, 2), q(-1, 2)).to_string() == "0");
  CHECK(nullcert::rat_add(q(1, 2), q(1, 3)) == q(5, 6));
}

TEST_CASE("rat_mul") {
  CHECK(nullcert::rat_mul(q(1), q(5, 6)) == q(5, 6));
  CHECK(nullcert::rat_mul(q(0), q(9, 4)).to_string() == "0");
  CHECK(nullcert::rat_mul(q(2, 3), q(3, 4)) == q(1, 2));
}

TEST_CASE("rat_inv") {
  CHECK(nullcert::rat_inv(q(1)) == q(1));
  CHECK(nullcert::rat_inv(q(-2, 3)) == q(-3, 2));
  CHECK(nullcert::rat_inv(q(-2, 3)).to_string() == "-3/2");
  CHECK_THROWS_AS(nullcert::rat_inv(q(0)), nullcert::DivisionByZero);
  CHECK_THROWS_AS(q(1) / q(0), nullcert::DivisionByZero);
}

TEST_CASE("construction canonicalizes") {
  CHECK(q(4, -6).to_string() == "-2/3");
  CHECK(q(0, -5).to_string() == "0");
  CHECK(q(4, -6).is_canonical());
  CHECK_THROWS_AS(q(1, 0), nullcert::DivisionByZero);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("7") == q(7));
  CHECK(Rational::parse("-7") == q(-7));
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-0/3").to_string() == "0");
  CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("1/0"), nullcert::DivisionByZero);
  for (const char* bad : {"", "-", "1/", "/2", "1/-2", "+3", "1.5", "0x10", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), nullcert::InvalidArgument);
  }
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_q(rng);
    const Rational b = random_q(rng);
    const Rational c = random_q(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == q(0));
    for (const Rational& r : {a + b, a * b, a - c}) {
      CHECK(r.is_canonical());
      CHECK(Rational::parse(r.to_string()) == r);  // re-canonicalizing is a no-op
    }
    if (!a.is_zero()) CHECK(a * a.inverse() == q(1));
  }
}
