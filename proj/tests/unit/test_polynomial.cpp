#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nullcert/error.hpp"
#include "nullcert/polynomial.hpp"
#include "nullcert/sysio.hpp"
#include "oracle.hpp"

using namespace nullcert;

namespace {

const std::vector<std::string> kXY{"x1", "x2", "x3", "y1", "y2", "y3"};

RingPtr xy_ring() { return make_lex_ring(kXY); }

Polynomial P(const RingPtr& r, const char* text) { return parse_polynomial(text, r); }

}  // namespace

TEST_CASE("poly_add") {
  const auto r = xy_ring();
  const Polynomial f = P(r, "x1*x3 + 1");
  CHECK(poly_add(f, Polynomial(r)) == f);
  CHECK(poly_add(P(r, "x2 + x3"), P(r, "-x3")) == P(r, "x2"));
  const Polynomial sum = poly_add(P(r, "x1*x3 + 1"), P(r, "x2*x3"));
  REQUIRE(sum.size() == 3);
  CHECK(render_polynomial(sum) == "x1*x3 + x2*x3 + 1");
  CHECK(sum.is_canonical());
}

TEST_CASE("poly_mul") {
  const auto r = xy_ring();
  const Polynomial f = P(r, "x1*x3 + 1");
  CHECK(poly_mul(f, Polynomial::constant(r, Rational(1))) == f);
  CHECK(poly_mul(P(r, "x2"), P(r, "x3")) == P(r, "x2*x3"));
  const Polynomial prod = poly_mul(P(r, "x2 + x3"), P(r, "x2 - x3"));
  CHECK(render_polynomial(prod) == "x2^2 - x3^2");
  CHECK(poly_mul(f, Polynomial(r)).is_zero());
}

TEST_CASE("ring mismatch is an error") {
  const auto a = xy_ring();
  const auto b = make_lex_ring({"x1", "x2"});
  CHECK_THROWS_AS(Polynomial::variable(a, "x1") + Polynomial::variable(b, "x1"), RingMismatch);
  const auto c = with_order(a, MonomialOrder::lex({5, 4, 3, 2, 1, 0}));
  CHECK_THROWS_AS(Polynomial::variable(a, "x1") * Polynomial::variable(c, "x1"), RingMismatch);
  // structurally equal rings interoperate
  CHECK_NOTHROW(Polynomial::variable(a, "x1") + Polynomial::variable(xy_ring(), "x2"));
}

TEST_CASE("exponent overflow is detected") {
  const auto r = make_lex_ring({"x", "y"});
  const Polynomial big = Polynomial::variable(r, "x", 4000000000U);
  CHECK_THROWS_AS(big * big, ExponentOverflow);
  const Polynomial other = Polynomial::variable(r, "y", 400000000U);
  CHECK_THROWS_AS(big * other, ExponentOverflow);  // total degree leaves 32 bits
  CHECK_THROWS_AS(Monomial({4000000000U, 400000000U}), ExponentOverflow);
}

TEST_CASE("substitute") {
  const auto r = xy_ring();
  SUBCASE("y1 -> 0") {
    Assignment a;
    a.emplace("y1", Polynomial(r));
    CHECK(substitute(P(r, "x2 + x3 - y1"), a) == P(r, "x2 + x3"));
  }
  SUBCASE("empty assignment is the identity") {
    const Polynomial f = P(r, "x1^2*y2 - 3/4*x3 + 5");
    CHECK(substitute(f, {}) == f);
  }
  SUBCASE("scaled graph images annihilate the extended final polynomial") {
    const auto s = make_lex_ring({"z", "x1", "x2", "x3", "y1", "y2", "y3"});
    Assignment a;
    a.emplace("y1", P(s, "z*(x2 + x3)"));
    a.emplace("y2", P(s, "z*x2*x3"));
    a.emplace("y3", P(s, "z*(x1*x3 + 1)"));
    const Polynomial p = P(s, "z + x1^2*y2 - x1*x2*y3 + x1*y1 - y3");
    CHECK(substitute(p, a).is_zero());

    // the naive expansion oracle agrees
    oracle::NaivePoly n = oracle::NaivePoly::from(p, s->registry().names());
    for (const auto& [name, image] : a) n = n.substitute(name, oracle::NaivePoly::from(image, s->registry().names()));
    CHECK(n.is_zero());
  }
  SUBCASE("images in a smaller target ring") {
    const auto x = make_lex_ring({"x1", "x2", "x3"});
    Assignment a;
    a.emplace("y1", P(x, "x2 + x3"));
    a.emplace("y2", P(x, "x2*x3"));
    a.emplace("y3", P(x, "x1*x3 + 1"));
    CHECK(substitute(P(r, "y3 - x1*x3"), a) == Polynomial::constant(x, Rational(1)));
    Assignment partial;
    partial.emplace("y1", P(x, "x2"));
    CHECK_THROWS_AS(substitute(P(r, "y1 + y2"), partial, x), UnknownVariable);
  }
}

TEST_CASE("leading_term") {
  const auto r = xy_ring();
  CHECK(leading_term(P(r, "x2 + x3 - y1"), r->order()).mono == P(r, "x2").leading_monomial());
  const Term c = leading_term(Polynomial::constant(r, Rational(5)), r->order());
  CHECK(c.coeff == Rational(5));
  CHECK(c.mono.is_one());
  CHECK(leading_term(P(r, "x1*x3 - y3 + 1"), r->order()).mono == P(r, "x1*x3").leading_monomial());
  CHECK_THROWS_AS(leading_term(Polynomial(r), r->order()), ZeroPolynomial);
  // an explicit order other than the ring's
  const auto rev = MonomialOrder::lex({5, 4, 3, 2, 1, 0});
  CHECK(leading_term(P(r, "x2 + x3 - y1"), rev).coeff == Rational(-1));
}

TEST_CASE("make_monic") {
  const auto r = xy_ring();
  CHECK(make_monic(P(r, "2*x1")) == P(r, "x1"));
  CHECK(make_monic(P(r, "-x3")) == P(r, "x3"));
  CHECK(make_monic(P(r, "x1")) == P(r, "x1"));
  CHECK(make_monic(P(r, "-2*x1 + 4*y1")) == P(r, "x1 - 2*y1"));
  CHECK_THROWS_AS(make_monic(Polynomial(r)), ZeroPolynomial);
}

TEST_CASE("extend_registry") {
  const VariableRegistry x({"x1", "x2", "x3"});
  const auto xy = extend_registry(x, {"y1", "y2", "y3"}, Position::back);
  CHECK(xy.names() == kXY);
  const auto zxy = extend_registry(xy, {"z"}, Position::front);
  CHECK(zxy.names() == std::vector<std::string>{"z", "x1", "x2", "x3", "y1", "y2", "y3"});
  CHECK_THROWS_AS(extend_registry(VariableRegistry({"x1"}), {"x1"}, Position::back), NameClash);
  CHECK_THROWS_AS(extend_registry(x, {"y", "y"}, Position::back), NameClash);

  // old polynomials re-embed by padding
  const auto small = make_lex_ring(x.names());
  const auto big = make_lex_ring(zxy.names());
  const Polynomial f = P(small, "x1*x3 + 1");
  const Polynomial g = embed(f, big);
  CHECK(g == P(big, "x1*x3 + 1"));
  CHECK(embed(g, small) == f);
  CHECK_THROWS_AS(embed(P(big, "z"), small), UnknownVariable);
}

TEST_CASE("ring axioms, homomorphism and leading-term multiplicativity on random polynomials") {
  std::mt19937_64 rng(7);
  const auto lex = make_lex_ring({"a", "b", "c"});
  const auto block = make_ring(VariableRegistry({"a", "b", "c"}), MonomialOrder::block({{2}, {0, 1}}));
  const auto target = make_lex_ring({"a", "b"});
  for (const auto& ring : {lex, block}) {
    for (int i = 0; i < 150; ++i) {
      const Polynomial f = oracle::random_polynomial(rng, ring);
      const Polynomial g = oracle::random_polynomial(rng, ring);
      const Polynomial h = oracle::random_polynomial(rng, ring);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      CHECK((f * g).is_canonical());
      CHECK((f - g).is_canonical());
      CHECK(Polynomial::from_terms(ring, (f * g).terms()) == f * g);

      // product against the naive oracle
      const auto names = ring->registry().names();
      CHECK(oracle::NaivePoly::from(f * g, names) ==
            oracle::NaivePoly::from(f, names) * oracle::NaivePoly::from(g, names));

      if (!f.is_zero() && !g.is_zero()) {
        const Term lf = leading_term(f, ring->order());
        const Term lg = leading_term(g, ring->order());
        const Term lfg = leading_term(f * g, ring->order());
        CHECK(lfg.mono == lf.mono * lg.mono);
        CHECK(lfg.coeff == lf.coeff * lg.coeff);
      }

      Assignment a;
      a.emplace("c", oracle::random_polynomial(rng, target, 3, 1));
      CHECK(substitute(f + g, a, target) == substitute(f, a, target) + substitute(g, a, target));
      CHECK(substitute(f * g, a, target) == substitute(f, a, target) * substitute(g, a, target));
    }
  }
}
