#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "../support/instances.hpp"

using namespace parametra;
using testing::Ring;

TEST_CASE("normal form examples") {
  Ring r({"g", "l"}, {"d"});
  ModMatrix G = r.rows({{"d^2+g/l"}});
  CHECK(normal_form(r.vec({"d^2+g/l"}), G, r.order).is_zero());
  ModMatrix empty(r.np(), r.nv(), 1);
  CHECK(normal_form(r.vec({"d+1"}), empty, r.order) == r.vec({"d+1"}));

  Ring s({"a", "b"}, {"d"});
  CHECK(normal_form(s.vec({"a*d+b"}), s.rows({{"d+b/a"}}), s.order).is_zero());
}

TEST_CASE("rendering matches session style") {
  Ring r({"g", "l1", "l2"}, {"d"});
  CHECK(r.str(r.p("-g*l2*d^2-g^2")) == "(-g*l2)*d^2+(-g^2)");
  CHECK(r.str(r.p("2*d^2-1/3")) == "2*d^2-1/3");
  CHECK(r.str(r.p("-l1/(g^2*l1-g^2*l2)")) == "(-l1)/(g^2*l1-g^2*l2)");
  CHECK(r.str(r.p("d-d")) == "0");
}

TEST_CASE("two pendula without friction: generic basis is the identity") {
  Ring r({"g", "m1", "m2", "L1", "L2"}, {"d"});
  ModMatrix F = r.rows({{"L1*d^2-g", "0", "m1*L1*d^2"}, {"0", "L2*d^2-g", "m2*L2*d^2"}});
  ModMatrix G = groebner_basis(F, r.order);
  CHECK(G.cols() == 2);
  CHECK(is_groebner_basis(G, r.order));
  for (const ModElement& c : G.columns()) CHECK(in_span(ModMatrix::identity(r.np(), r.nv(), 2), c, r.order));
  ModMatrix I = ModMatrix::identity(r.np(), r.nv(), 2);
  for (const ModElement& c : I.columns()) CHECK(in_span(G, c, r.order));

  ModMatrix T = lift(F, I, r.order);
  CHECK(F * T == I);
  ModMatrix expected = r.rows({
      {"L1*L2/(g^2*L1-g^2*L2)*d^2-1/g", "-m1*L1*L2/(g^2*m2*L1-g^2*m2*L2)*d^2"},
      {"m2*L1*L2/(g^2*m1*L1-g^2*m1*L2)*d^2", "-L1*L2/(g^2*L1-g^2*L2)*d^2-1/g"},
      {"-L1*L2/(g^2*m1*(L1-L2))*d^2+L1/(g*m1*(L1-L2))", "L1*L2/(g^2*m2*(L1-L2))*d^2-L2/(g*m2*(L1-L2))"},
  });
  CHECK(T == expected);
}

TEST_CASE("two pendula with equal lengths") {
  Ring r({"g", "m1", "m2", "L"}, {"d"});
  ModMatrix F = r.rows({{"L*d^2-g", "0", "m1*L*d^2"}, {"0", "L*d^2-g", "m2*L*d^2"}});
  ModMatrix G = groebner_basis(F, r.order);
  REQUIRE(G.cols() == 2);
  ModMatrix expected = r.rows({{"0", "1"}, {"d^2-g/L", "m2/m1"}});
  bool match = (G == expected) || (G == expected.select_columns(std::vector<std::size_t>{1, 0}));
  CHECK(match);
}

TEST_CASE("trinity identities on the bipendulum") {
  Ring r({"g", "l1", "l2"}, {"d"});
  ModMatrix R = r.rows({{"d^2+g/l1", "0", "-g/l1"}, {"0", "d^2+g/l2", "-g/l2"}});
  Trinity t = trinity(R, r.order);
  CHECK(R * t.transform == t.gb);
  CHECK((R * t.syzygies).is_zero());
  CHECK(t.syzygies.cols() >= 1);
  CHECK(is_groebner_basis(t.gb, r.order));
  CHECK(t.gb == groebner_basis(R, r.order));
}

TEST_CASE("syzygy examples") {
  Ring r({}, {"x", "y"});
  ModMatrix F = r.rows({{"x", "y"}});
  ModMatrix S = syzygies(F, r.order);
  REQUIRE(S.cols() == 1);
  CHECK((F * S).is_zero());
  CHECK((S.at(0, 0) == r.p("y") || S.at(0, 0) == r.p("-y")));

  ModMatrix Z = r.rows({{"x", "0"}});
  ModMatrix SZ = syzygies(Z, r.order);
  REQUIRE(SZ.cols() == 1);
  CHECK(SZ.column(0) == r.vec({"0", "1"}));

  CHECK(syzygies(ModMatrix::identity(0, 2, 2), r.order).cols() == 0);
  CHECK(groebner_basis(r.rows({{"0"}}), r.order).cols() == 0);
}

TEST_CASE("lift rejects non-members") {
  Ring r({}, {"d"});
  ModMatrix F = r.rows({{"d"}});
  CHECK_THROWS_AS(lift(F, r.rows({{"1"}}), r.order), MembershipError);
  ModMatrix T = lift(F, F, r.order);
  CHECK(T == r.rows({{"1"}}));
}

TEST_CASE("trinity identities on random instances") {
  testing::InstanceGenerator gen(2024);
  for (int i = 0; i < 200; ++i) {
    ModMatrix F = gen.matrix(i % 2 == 0);
    ModOrder o = gen.order(i % 2 == 0);
    Trinity t = trinity(F, o);
    CHECK(t.gb == F * t.transform);
    CHECK((F * t.syzygies).is_zero());
    CHECK(is_groebner_basis(t.gb, o));
    ModMatrix G = groebner_basis(F, o);
    CHECK(is_groebner_basis(G, o));
    for (const ModElement& c : F.columns()) CHECK(in_span(G, c, o));
    for (const ModElement& c : G.columns()) CHECK(in_span(groebner_basis(t.gb, o), c, o));
    CHECK(F * lift(F, G, o) == G);
  }
}

TEST_CASE("basis check rejects non-bases") {
  Ring r({}, {"x", "y"});
  CHECK_FALSE(is_groebner_basis(r.rows({{"x*y-1", "y^2-x"}}), r.order));
  CHECK_FALSE(is_groebner_basis(r.rows({{"x^2", "x*y+1", "y^2"}}), r.order));
  CHECK(is_groebner_basis(r.rows({{"x", "y"}}), r.order));
  testing::InstanceGenerator gen(99);
  for (int i = 0; i < 60; ++i) {
    ModMatrix F = gen.matrix(false);
    ModOrder o = gen.order();
    ModMatrix G = groebner_basis(F, o);
    CHECK(is_groebner_basis(G, o));
    // F is a basis iff every element of G reduces to zero by F.
    {
      bool reduced = true;
      for (const ModElement& g : G.columns()) reduced = reduced && normal_form(g, F, o).is_zero();
      CHECK(is_groebner_basis(F, o) == reduced);
    }
  }
}
