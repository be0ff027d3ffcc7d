#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nullcert/error.hpp"
#include "nullcert/ordering.hpp"
#include "nullcert/sysio.hpp"
#include "oracle.hpp"

using namespace nullcert;

namespace {

const VariableRegistry kZXY({"z", "x1", "x2", "x3", "y1", "y2", "y3"});

Monomial M(std::vector<Monomial::Exponent> e) { return Monomial(std::move(e)); }

// sampling oracle for the elimination property: every sampled monomial with a
// positive exponent in some eliminated variable beats every sampled one without
std::size_t elimination_violations(const MonomialOrder& order, const std::vector<std::size_t>& elim,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (int i = 0; i < 2000; ++i) {
    Monomial a = oracle::random_monomial(rng, order.num_vars(), 4);
    std::vector<Monomial::Exponent> eb(order.num_vars());
    for (std::size_t v = 0; v < eb.size(); ++v) eb[v] = static_cast<Monomial::Exponent>(rng() % 5);
    for (auto v : elim) eb[v] = 0;
    const Monomial b(eb);
    bool has = false;
    for (auto v : elim) has = has || a[v] > 0;
    if (!has) continue;
    if (order.compare(a, b) != std::strong_ordering::greater) ++bad;
  }
  return bad;
}

}  // namespace

TEST_CASE("compare") {
  const auto lex2 = MonomialOrder::lex(2);
  CHECK(compare(M({1, 0}), M({0, 2}), lex2) == std::strong_ordering::greater);
  CHECK(compare(M({0, 2}), M({1, 0}), lex2) == std::strong_ordering::less);
  CHECK(compare(M({3, 1}), M({3, 1}), lex2) == std::strong_ordering::equal);
  const auto lex7 = MonomialOrder::lex(7);
  // z*x3 against x1^2*y2
  CHECK(compare(M({1, 0, 0, 1, 0, 0, 0}), M({0, 2, 0, 0, 0, 1, 0}), lex7) == std::strong_ordering::greater);
  CHECK_THROWS_AS(compare(M({1, 0}), M({1, 0, 0}), lex2), RingMismatch);
}

TEST_CASE("lex with a significance permutation") {
  const auto rev = MonomialOrder::lex({1, 0});
  CHECK(rev.compare(M({5, 0}), M({0, 1})) == std::strong_ordering::less);
  CHECK(rev.significance() == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(MonomialOrder::lex({0, 0}), InvalidOrder);
  CHECK_THROWS_AS(MonomialOrder::lex({0, 2}), InvalidOrder);
}

TEST_CASE("block comparison") {
  // [x0][x1,x2]: degree in the first block decides, then inner lex, then the next block
  const auto b = MonomialOrder::block({{0}, {1, 2}});
  CHECK(b.compare(M({1, 0, 0}), M({0, 9, 9})) == std::strong_ordering::greater);
  CHECK(b.compare(M({1, 0, 1}), M({1, 1, 0})) == std::strong_ordering::less);
  // inside a block, higher total degree wins before lex
  const auto g = MonomialOrder::block({{0, 1}, {2}});
  CHECK(g.compare(M({0, 2, 0}), M({1, 0, 0})) == std::strong_ordering::greater);
  CHECK(g.compare(M({1, 1, 0}), M({0, 2, 5})) == std::strong_ordering::greater);
  CHECK_THROWS_AS(MonomialOrder::block({{0}, {}}), InvalidOrder);
  CHECK_THROWS_AS(MonomialOrder::block({{0, 1}, {1}}), InvalidOrder);
  CHECK_THROWS_AS(MonomialOrder::block({{0}, {2}}), InvalidOrder);
}

TEST_CASE("is_eliminating_order") {
  const auto lex_z_first = parse_order("lex:z,x1,x2,x3,y1,y2,y3", kZXY);
  const auto lex_z_last = parse_order("lex:x1,x2,x3,y1,y2,y3,z", kZXY);
  const auto block_z = parse_order("block:[z][x1,x2,x3,y1,y2,y3]", kZXY);
  const auto block_mixed = parse_order("block:[x1,z][x2,x3,y1,y2,y3]", kZXY);

  CHECK(is_eliminating_order(lex_z_first, kZXY, {"z"}));
  CHECK_FALSE(is_eliminating_order(lex_z_last, kZXY, {"z"}));
  CHECK(is_eliminating_order(block_z, kZXY, {"z"}));
  CHECK_FALSE(is_eliminating_order(block_mixed, kZXY, {"z"}));
  CHECK(is_eliminating_order(lex_z_first, kZXY, {"x1", "z"}));
  CHECK_FALSE(is_eliminating_order(lex_z_first, kZXY, {"x1"}));
  CHECK_THROWS_AS(is_eliminating_order(lex_z_first, kZXY, {"w"}), UnknownVariable);
  CHECK_THROWS_AS(is_eliminating_order(lex_z_first, std::vector<std::size_t>{9}), UnknownVariable);

  // structural answers agree with sampling
  CHECK(elimination_violations(lex_z_first, {0}, 1) == 0);
  CHECK(elimination_violations(block_z, {0}, 2) == 0);
  CHECK(elimination_violations(lex_z_last, {0}, 3) > 0);
  CHECK(elimination_violations(block_mixed, {0}, 4) > 0);
}

TEST_CASE("verify_order_axioms") {
  CHECK(verify_order_axioms(MonomialOrder::lex(7), 11).passed);
  CHECK(verify_order_axioms(parse_order("block:[z][x1,x2,x3,y1,y2,y3]", kZXY), 12).passed);
  CHECK(verify_order_axioms(MonomialOrder::block({{2, 0}, {1}, {3}}), 13).passed);
  CHECK(verify_order_axioms(MonomialOrder::lex({3, 1, 0, 2}), 14).passed);

  SUBCASE("degree-only comparator is not antisymmetric") {
    const MonomialComparator broken = [](const Monomial& a, const Monomial& b) {
      return a.total_degree() <=> b.total_degree();
    };
    const auto r = verify_order_axioms(broken, 3, 5);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.violation.empty());
  }
  SUBCASE("reverse lex puts 1 on top") {
    const auto lex = MonomialOrder::lex(3);
    const MonomialComparator reversed = [lex](const Monomial& a, const Monomial& b) { return lex.compare(b, a); };
    CHECK_FALSE(verify_order_axioms(reversed, 3, 6).passed);
  }
}

TEST_CASE("z times anything nontrivial exceeds z") {
  std::mt19937_64 rng(99);
  const auto z = Monomial::variable(7, 0);
  for (const auto& order : {MonomialOrder::lex(7), parse_order("block:[z][x1,x2,x3,y1,y2,y3]", kZXY),
                            parse_order("lex:y3,x1,z,x2,x3,y1,y2", kZXY)}) {
    for (int i = 0; i < 300; ++i) {
      const Monomial m = oracle::random_monomial(rng, 7);
      if (m.is_one()) continue;
      CHECK(order.compare(z * m, z) == std::strong_ordering::greater);
    }
  }
}

TEST_CASE("format_order and without_variable") {
  const auto b = parse_order("block:[z][x1,x2,x3,y1,y2,y3]", kZXY);
  CHECK(format_order(b, kZXY) == "block:[z][x1,x2,x3,y1,y2,y3]");
  CHECK(format_order(MonomialOrder::lex(7), kZXY) == "lex:z,x1,x2,x3,y1,y2,y3");
  CHECK(b.without_variable(0) == MonomialOrder::block({{0, 1, 2, 3, 4, 5}}));
  CHECK(MonomialOrder::lex({2, 0, 1}).without_variable(0) == MonomialOrder::lex({1, 0}));
}
