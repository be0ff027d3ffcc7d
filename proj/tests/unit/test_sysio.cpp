#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nullcert/error.hpp"
#include "nullcert/sysio.hpp"
#include "oracle.hpp"

using namespace nullcert;

namespace {

template <class F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parse_system") {
  const SystemF F = parse_system("vars: x1 x2 x3\nx2 + x3\nx2*x3\nx1*x3 + 1");
  const auto& r = F.ring();
  CHECK(r->registry().names() == std::vector<std::string>{"x1", "x2", "x3"});
  REQUIRE(F.size() == 3);
  CHECK(F.polys()[0] == Polynomial::variable(r, "x2") + Polynomial::variable(r, "x3"));
  CHECK(F.polys()[1] == Polynomial::variable(r, "x2") * Polynomial::variable(r, "x3"));
  CHECK(F.polys()[2] ==
        Polynomial::variable(r, "x1") * Polynomial::variable(r, "x3") + Polynomial::constant(r, Rational(1)));
}

TEST_CASE("comments, blank lines and expression forms") {
  const auto doc = parse_document("# header\n\n  vars: a b # trailing\norder: lex:b,a\n\n(a - b)*(a - b) # square\n-3/6*a^0*b\n");
  CHECK(doc.order_text == std::optional<std::string>("lex:b,a"));
  const auto& F = doc.system;
  REQUIRE(F.size() == 2);
  CHECK(render_polynomial(F.polys()[0]) == "a^2 - 2*a*b + b^2");
  CHECK(render_polynomial(F.polys()[1]) == "-1/2*b");
  CHECK(render_polynomial(parse_polynomial("-(a + 1)*(a - 1) + a^2", F.ring())) == "1");
  CHECK_THROWS_AS(parse_polynomial("(a + b)^2", F.ring()), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2^3", F.ring()), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  const auto zero = parse_error_of([] { parse_system("vars: x\n0"); });
  CHECK(zero.line() == 2);
  CHECK(zero.message().find("zero polynomial") != std::string::npos);

  const auto malformed = parse_error_of([] { parse_system("vars: x\nx + + 1"); });
  CHECK(malformed.line() == 2);
  CHECK(malformed.column() == 5);

  const auto unknown = parse_error_of([] { parse_system("vars: x\nx + w"); });
  CHECK(unknown.line() == 2);
  CHECK(unknown.column() == 5);

  CHECK(parse_error_of([] { parse_system(""); }).message().find("vars") != std::string::npos);
  CHECK(parse_error_of([] { parse_system("vars: x\n# nothing\n"); }).message().find("no polynomials") !=
        std::string::npos);
  CHECK(parse_error_of([] { parse_system("vars: x x\nx"); }).line() == 1);
  CHECK(parse_error_of([] { parse_system("vars: 1x\nx"); }).line() == 1);
  CHECK(parse_error_of([] { parse_system("x\nvars: x"); }).line() == 1);
  CHECK(parse_error_of([] { parse_system("vars: x\nx/0"); }).line() == 2);
  CHECK(parse_error_of([] { parse_system("vars: x\nx^-1"); }).line() == 2);
  CHECK(parse_error_of([] { parse_system("vars: x\nx^99999999999"); }).line() == 2);
  CHECK(parse_error_of([] { parse_system("vars: x\n(x + 1"); }).line() == 2);
  CHECK(parse_error_of([] { parse_system("vars: x\n2x"); }).line() == 2);
  CHECK(parse_error_of([] { parse_system("vars: x\nx^4000000000*x^4000000000"); }).line() == 2);
  CHECK(parse_error_of([] { parse_system("vars: x\norder: lex:x\norder: lex:x\nx"); }).line() == 3);
  CHECK(parse_error_of([] { parse_system("vars: x y\norder: lex:x\nx"); }).line() == 2);
  CHECK(parse_error_of([] { parse_system("vars: x\n" + std::string(1000, '(') + "x" + std::string(1000, ')')); })
            .line() == 2);
}

TEST_CASE("render_polynomial") {
  const auto s = make_lex_ring({"z", "x1", "x2", "x3", "y1", "y2", "y3"});
  const char* text = "z + x1^2*y2 - x1*x2*y3 + x1*y1 - y3";
  CHECK(render_polynomial(parse_polynomial(text, s)) == text);
  CHECK(render_polynomial(Polynomial(s)) == "0");
  CHECK(render_polynomial(parse_polynomial("-x3", s)) == "-x3");
  CHECK(render_polynomial(parse_polynomial("-1", s)) == "-1");
  CHECK(render_polynomial(parse_polynomial("3/4 - 2/3*x1^3", s)) == "-2/3*x1^3 + 3/4");
  // under another order
  const auto rev = MonomialOrder::lex({6, 5, 4, 3, 2, 1, 0});
  CHECK(render_polynomial(parse_polynomial("z + y3", s), rev) == "y3 + z");
}

TEST_CASE("parse_order") {
  const VariableRegistry reg({"z", "x1", "x2", "x3", "y1", "y2", "y3"});
  CHECK(parse_order("lex:z,x1,x2,x3,y1,y2,y3", reg) == MonomialOrder::lex(7));
  const auto b = parse_order("block:[z][x1,x2,x3,y1,y2,y3]", reg);
  CHECK(b.kind() == MonomialOrder::Kind::block);
  CHECK(is_eliminating_order(b, reg, {"z"}));
  CHECK_THROWS_AS(parse_order("lex:x1,x1", reg), ParseError);
  CHECK_THROWS_AS(parse_order("lex:z,x1,x2,x3,y1,y2", reg), ParseError);
  CHECK_THROWS_AS(parse_order("lex:z,x1,x2,x3,y1,y2,y3,w", reg), ParseError);
  CHECK_THROWS_AS(parse_order("grevlex:z,x1,x2,x3,y1,y2,y3", reg), ParseError);
  CHECK_THROWS_AS(parse_order("block:[z][]", reg), ParseError);
  CHECK_THROWS_AS(parse_order("block:[z,x1,x2,x3,y1,y2,y3", reg), ParseError);
}

TEST_CASE("render_system round trip") {
  const SystemF F = parse_system("vars: b a\na*b - 1/2\n-a^3 + 7\n");
  const SystemF G = parse_system(render_system(F));
  CHECK(G.ring()->registry() == F.ring()->registry());
  CHECK(G.polys() == std::vector<Polynomial>{embed(F.polys()[0], G.ring()), embed(F.polys()[1], G.ring())});
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back(std::string(1, static_cast<char>('a' + v)) + std::to_string(rng() % 20));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    const auto ring = make_lex_ring(names);
    const Polynomial p = oracle::random_polynomial(rng, ring, 6, 4, 1000);
    const std::string text = render_polynomial(p);
    CAPTURE(text);
    CHECK(parse_polynomial(text, ring) == p);
    CHECK(render_polynomial(parse_polynomial(text, ring)) == text);
  }
}

TEST_CASE("random bytes never crash the parser") {
  std::mt19937_64 rng(4242);
  const std::string alphabet = "vars: xyz019+-*/^()#\n\t order:lex,block[]";
  std::size_t parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    const bool structured = i % 2 == 0;
    if (structured) text = "vars: x y z\n";
    const std::size_t len = rng() % 60;
    for (std::size_t k = 0; k < len; ++k) {
      text.push_back(i % 3 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()]);
    }
    try {
      (void)parse_system(text);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    } catch (const Error& e) {
      FAIL("non-parse error: " << e.what());
    }
  }
  CHECK(parsed < 5000);
}
