#include "doctest.h"
#include "parametra/ordering.hpp"

using namespace parametra;

TEST_CASE("degrevlex and lex on monomials") {
  auto dp = MonoOrder::degrevlex(3);
  auto lp = MonoOrder::lex(3);
  Monomial xz{1, 0, 1}, yy{0, 2, 0}, x{1, 0, 0};
  CHECK(dp.compare(yy, xz) > 0);
  CHECK(lp.compare(xz, yy) > 0);
  CHECK(dp.compare(xz, x) > 0);
  CHECK(dp.compare(x, x) == 0);
}

TEST_CASE("weighted order uses tie-break") {
  auto w = MonoOrder::weighted({1, 1}, MonoOrder::degrevlex(3));
  Monomial a{0, 0, 3}, b{1, 0, 0};
  CHECK(w.compare(b, a) > 0);
  CHECK(w.to_string() == "a(1,1),dp");
}

TEST_CASE("product order eliminates the first block") {
  auto p = MonoOrder::product(MonoOrder::degrevlex(1), MonoOrder::degrevlex(2));
  Monomial a{1, 0, 0}, b{0, 5, 5};
  CHECK(p.compare(a, b) > 0);
}

TEST_CASE("module orders") {
  Monomial d2{2}, d1{1};
  ModOrder top(MonoOrder::degrevlex(1));
  CHECK(top.compare(d2, 1, d1, 0) > 0);
  CHECK(top.compare(d1, 0, d1, 1) > 0);
  ModOrder pot = top.with_scheme(ModScheme::PositionOverTerm);
  CHECK(pot.compare(d1, 0, d2, 1) > 0);
  ModOrder asc(MonoOrder::degrevlex(1), ModScheme::TermOverPosition, ComponentOrder::Ascending);
  CHECK(asc.compare(d1, 1, d1, 0) > 0);
}

TEST_CASE("lift order puts tags below real components") {
  LiftOrder lo(ModOrder(MonoOrder::degrevlex(1)), 2, 3);
  Monomial one{0}, big{9};
  CHECK(lo.compare(one, 1, big, 2) > 0);
  CHECK(lo.compare(big, 3, one, 4) > 0);
  CHECK_THROWS_AS(lo.compare(one, 5, one, 0), std::out_of_range);
}

TEST_CASE("order tokens") {
  CHECK(parse_order("(c,dp)", 1).scheme() == ModScheme::TermOverPosition);
  CHECK(parse_order("(C,dp)", 1).components() == ComponentOrder::Ascending);
  CHECK(parse_order("(dp,c)", 1).scheme() == ModScheme::PositionOverTerm);
  CHECK(parse_order("(c,lp)", 2).base().kind() == MonoOrder::Kind::Lex);
  CHECK(parse_order("(a(1,1),dp)", 4).base().kind() == MonoOrder::Kind::Weighted);
  CHECK(parse_order("(c,dp)", 1).to_string() == "(c,dp)");
  CHECK_THROWS_AS(parse_order("(c,xx)", 1), OrderSyntaxError);
  CHECK_THROWS_AS(parse_order("(c,dp", 1), OrderSyntaxError);
  CHECK_THROWS_AS(parse_order("(a(1,1,1),dp)", 2), OrderSyntaxError);
}
