#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "parametra/arith/factorize.hpp"
#include "parametra/arith/param_fraction.hpp"

using namespace parametra;

namespace {

ParamPoly var(std::size_t n, std::size_t i) { return ParamPoly::variable(n, i); }
ParamPoly cst(std::size_t n, long c) { return ParamPoly::constant(n, c); }

ParamPoly random_poly(std::mt19937& rng, std::size_t n, int terms, int maxdeg) {
  std::vector<ParamPoly::Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Exponent>(rng() % (maxdeg + 1));
    long c = static_cast<long>(rng() % 11) - 5;
    ts.push_back({m, BigRational(c)});
  }
  return ParamPoly::from_terms(n, std::move(ts));
}

}  // namespace

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto a = random_poly(rng, 3, 4, 2), b = random_poly(rng, 3, 4, 2), c = random_poly(rng, 3, 3, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) {
      auto q = divide_exact(a * b, b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("printing") {
  std::vector<std::string> names{"g", "l1", "l2"};
  auto g = var(3, 0), l1 = var(3, 1), l2 = var(3, 2);
  CHECK((g * g * l1 - g * g * l2).to_string(names) == "g^2*l1-g^2*l2");
  CHECK((BigRational(1, 2) * g).to_string(names) == "1/2*g");
  CHECK(cst(3, 0).to_string(names) == "0");
}

TEST_CASE("gcd properties") {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(rng, 3, 3, 2), b = random_poly(rng, 3, 3, 2), c = random_poly(rng, 3, 2, 1);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto g = gcd(a, b);
    CHECK(divide_exact(a, g));
    CHECK(divide_exact(b, g));
    CHECK(gcd(a * c, b * c) == (c.monic() * g).monic());
  }
  auto g = var(2, 0), l = var(2, 1);
  CHECK(gcd(g * g - l * l, g * l - l * l) == (g - l).monic());
  CHECK_THROWS_AS(gcd(cst(2, 0), cst(2, 0)), DomainError);
}

TEST_CASE("fractions normalize and evaluate") {
  auto g = var(2, 0), l = var(2, 1);
  ParamFraction f(g * g - l * l, BigRational(2) * (g - l));
  CHECK(f.den().is_one());
  CHECK(f.num() == BigRational(1, 2) * (g + l));
  ParamFraction h(cst(2, 1), g);
  auto s = h + h;
  CHECK(s.num() == cst(2, 2));
  CHECK((h * ParamFraction(g)).is_one());
  std::vector<BigRational> pt{BigRational(3), BigRational(5)};
  CHECK(s.evaluate(pt) == BigRational(2, 3));
  std::vector<BigRational> zero{BigRational(0), BigRational(1)};
  CHECK_THROWS_AS(h.evaluate(zero), DomainError);
  CHECK_THROWS_AS(ParamFraction(g, cst(2, 0)), DomainError);
  CHECK(h.to_string(std::vector<std::string>{"g", "l"}) == "(1)/(g)");
}

TEST_CASE("fraction field laws on random inputs") {
  std::mt19937 rng(23);
  std::vector<BigRational> pt{BigRational(7, 3), BigRational(-5, 2), BigRational(11)};
  for (int i = 0; i < 30; ++i) {
    auto n1 = random_poly(rng, 3, 3, 2), d1 = random_poly(rng, 3, 2, 1);
    auto n2 = random_poly(rng, 3, 3, 2), d2 = random_poly(rng, 3, 2, 1);
    if (d1.is_zero() || d2.is_zero() || d1.evaluate(pt) == 0 || d2.evaluate(pt) == 0) continue;
    ParamFraction a(n1, d1), b(n2, d2);
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("factorization reconstructs its input") {
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(rng, 3, 2, 2), b = random_poly(rng, 3, 2, 1);
    auto p = a * b * b;
    if (p.is_zero()) continue;
    auto f = squarefree_factors(p);
    ParamPoly prod = ParamPoly::constant(3, f.content);
    for (const auto& x : f.factors) prod = prod * x.poly.pow(x.multiplicity);
    CHECK(prod == p);
    for (std::size_t u = 0; u < f.factors.size(); ++u)
      for (std::size_t v = u + 1; v < f.factors.size(); ++v)
        CHECK(gcd(f.factors[u].poly, f.factors[v].poly).is_one());
  }
}

TEST_CASE("known factorizations") {
  // m1, m2, g, L1, L2
  const std::size_t n = 5;
  auto m1 = var(n, 0), m2 = var(n, 1), g = var(n, 2), L1 = var(n, 3), L2 = var(n, 4);
  auto f = squarefree_factors(m1 * m2 * g * g * (L1 - L2));
  REQUIRE(f.factors.size() == 4);
  unsigned gmult = 0;
  for (const auto& x : f.factors)
    if (x.poly == g) gmult = x.multiplicity;
  CHECK(gmult == 2);

  auto d = squarefree_factors((L1 - L2) * (L1 - L2));
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].multiplicity == 2);

  // bilinear irreducible piece stays whole
  auto P = m1 * m1 * L1 * L1 * L1 * L1 * g - m1 * L1 * L1 * L2 * m2 + m2 * L2 * L2 * g;
  CHECK(distinct_factors(P).size() == 1);

  // split into two factors of degree one in g
  auto q = (g * L1 + m1) * (g * L2 - m2);
  CHECK(distinct_factors(q).size() == 2);
  CHECK_THROWS_AS(squarefree_factors(cst(n, 0)), DomainError);
}
