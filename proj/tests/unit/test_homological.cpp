#include "doctest.h"
#include "helpers.hpp"
#include "parametra/analysis/homological.hpp"

using namespace parametra;
using testing::Ring;

namespace {

PresentedModule bipendulum(const Ring& r, const char* l1, const char* l2) {
  std::string a = std::string("d^2+g/") + l1, b = std::string("d^2+g/") + l2;
  return PresentedModule(r.rows({{a, "0", std::string("-g/") + l1}, {"0", b, std::string("-g/") + l2}}));
}

bool same_ideal(const std::vector<OpPoly>& a, const Ring& r, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(canonize(a[i]) == canonize(r.p(b[i])))) return false;
  return true;
}

// a * g in span(relations) for every annihilator element and generator.
bool annihilates(const std::vector<OpPoly>& ann, const ModMatrix& gens, const ModMatrix& relations,
                 const ModOrder& order) {
  ModMatrix G = groebner_basis(relations, order);
  for (const OpPoly& a : ann)
    for (const ModElement& g : gens.columns())
      if (!in_span(G, a * g, order)) return false;
  return true;
}

}  // namespace

TEST_CASE("verdict vocabulary") {
  CHECK(verdict_text(Verdict::Controllable) == "strongly controllable(flat)");
  CHECK(verdict_text(Verdict::NotControllable) == "not controllable");
  CHECK(verdict_text(Verdict::Autonomous) == "autonomous");
  CHECK(verdict_text(Verdict::NotAutonomous) == "not autonomous");
}

TEST_CASE("bipendulum generic control report") {
  Ring r({"g", "l1", "l2"}, {"d"});
  AnalysisReport a = control_analysis(bipendulum(r, "l1", "l2"), r.order);
  CHECK(a.first_nonzero_ext == -1);
  CHECK(a.verdict == Verdict::Controllable);
  REQUIRE(a.image_rep);
  REQUIRE(a.left_inverse);
  CHECK(*a.left_inverse * *a.image_rep == ModMatrix::identity(3, 1, 1));
  CHECK(a.dimension == 1);
  REQUIRE(a.genericity);
  CHECK(a.genericity->factors == std::vector<ParamPoly>{r.pp("g"), r.pp("l1-l2")});
}

TEST_CASE("bipendulum with equal lengths") {
  Ring r({"g", "l"}, {"d"});
  PresentedModule M = bipendulum(r, "l", "l");
  AnalysisReport a = control_analysis(M, r.order);
  CHECK(a.first_nonzero_ext == 1);
  CHECK(a.verdict == Verdict::NotControllable);
  CHECK(same_ideal(a.torsion_annihilator, r, {"l*d^2+g"}));
  REQUIRE(a.kernel_rep);
  CHECK((*a.kernel_rep * *a.image_rep).is_zero());
  CHECK(a.dimension == 1);
  CHECK(same_ideal(torsion_annihilator(M, r.order), r, {"l*d^2+g"}));

  AnalysisReport b = autonomy_analysis(M, r.order);
  CHECK(b.first_nonzero_ext == 0);
  CHECK(b.verdict == Verdict::NotAutonomous);
  CHECK(b.column_rank == 2u);
  CHECK(b.dimension == 1);
}

TEST_CASE("generically autonomous example and its strata") {
  Ring r({"a", "b"}, {"d"});
  AnalysisReport g = autonomy_analysis(PresentedModule(r.rows({{"a*d+b"}})), r.order);
  CHECK(g.verdict == Verdict::Autonomous);
  CHECK(same_ideal(torsion_annihilator(PresentedModule(r.rows({{"a*d+b"}})), r.order), r, {"a*d+b"}));

  Ring s({"b"}, {"d"});
  AnalysisReport zero = autonomy_analysis(PresentedModule(s.rows({{"b"}})), s.order);
  CHECK(zero.verdict == Verdict::Autonomous);
  CHECK(zero.first_nonzero_ext == -1);
  CHECK(system_dimension(PresentedModule(s.rows({{"b"}})), s.order) == -1);

  Ring t({}, {"d"});
  AnalysisReport free = autonomy_analysis(PresentedModule(t.rows({{"0"}})), t.order);
  CHECK(free.verdict == Verdict::NotAutonomous);
  CHECK(free.column_rank == 0u);
  CHECK(control_analysis(PresentedModule(t.rows({{"0"}})), t.order).verdict == Verdict::Controllable);
}

TEST_CASE("direct sum example and its strata") {
  Ring r({"a", "b"}, {"d"});
  PresentedModule M(r.rows({{"0", "0"}, {"0", "a*d+b"}}));
  AnalysisReport c = control_analysis(M, r.order);
  CHECK(c.verdict == Verdict::NotControllable);
  CHECK(same_ideal(c.torsion_annihilator, r, {"a*d+b"}));
  CHECK(autonomy_analysis(M, r.order).verdict == Verdict::NotAutonomous);

  Ring s({"a"}, {"d"});
  CHECK(same_ideal(control_analysis(PresentedModule(s.rows({{"0", "0"}, {"0", "a*d"}})), s.order).torsion_annihilator,
                   s, {"d"}));
  Ring t({"b"}, {"d"});
  PresentedModule E1(t.rows({{"0", "0"}, {"0", "b"}}));
  CHECK(control_analysis(E1, t.order).verdict == Verdict::Controllable);
  CHECK(2 - column_rank(E1.relations(), t.order) == 1);
  Ring u({}, {"d"});
  PresentedModule E3(u.rows({{"0", "0"}, {"0", "0"}}));
  CHECK(control_analysis(E3, u.order).verdict == Verdict::Controllable);
  CHECK(2 - column_rank(E3.relations(), u.order) == 2);
}

TEST_CASE("annihilator soundness") {
  Ring r({"g", "l"}, {"d"});
  PresentedModule M = bipendulum(r, "l", "l");
  ModMatrix Rp = kernel_representation(M, r.order);
  std::vector<OpPoly> ann = torsion_annihilator(M, r.order);
  CHECK(annihilates(ann, Rp.transpose(), M.relation_vectors(), r.order));

  Ring s({}, {"x", "y"});
  PresentedModule N(s.rows({{"x*y", "0"}, {"0", "x^2"}, {"y", "y"}}));
  std::vector<OpPoly> a = annihilator(N, s.order);
  CHECK(annihilates(a, ModMatrix::identity(0, 2, 2), N.relation_vectors(), s.order));
  CHECK(same_ideal(annihilator(PresentedModule(s.rows({{"1"}})), s.order), s, {"1"}));
}

TEST_CASE("resolution maps compose to zero") {
  Ring s({"a"}, {"x", "y"});
  PresentedModule M(s.rows({{"x", "y", "0"}, {"0", "x", "y"}, {"a*y", "0", "x"}}));
  auto res = free_resolution(M, 4, s.order);
  for (std::size_t i = 0; i + 1 < res.size(); ++i) {
    CHECK((res[i].map * res[i + 1].map).is_zero());
    CHECK(res[i + 1].map.rows() == res[i].map.cols());
    ModMatrix again = syzygies(res[i].map, s.order);
    for (const ModElement& c : again.columns()) CHECK(in_span(groebner_basis(res[i + 1].map, s.order), c, s.order));
  }
}

TEST_CASE("duality consistency and the principal ideal case") {
  Ring r({"g", "l1", "l2"}, {"d"});
  Ring e({"g", "l"}, {"d"});
  for (auto [ring, M] : {std::pair{&r, bipendulum(r, "l1", "l2")}, std::pair{&e, bipendulum(e, "l", "l")}}) {
    auto ext = ext_modules(M, 1, ring->order);
    CHECK(hom_vanishes(M, ring->order) == ext[0].vanishes);
    bool torsion_free = control_analysis(M, ring->order).first_nonzero_ext == -1;
    CHECK(torsion_free == right_inverse(M.relations(), ring->order).has_value());
  }
}

TEST_CASE("friction strata annihilators") {
  Ring r1({"g", "m1", "m2", "L1", "L2", "d1", "d2"}, {"d"});
  auto ann = [](const Ring& r, const ModMatrix& R) { return control_analysis(PresentedModule(R), r.order).torsion_annihilator; };
  CHECK(same_ideal(ann(r1, r1.rows({{"m1*L1^2*d^2+d1*d", "0", "m1*L1*d^2"}, {"0", "m2*L2^2*d^2+d2*d", "m2*L2*d^2"}})),
                   r1, {"d"}));
  std::string z2 = "((m1*L1^2*d2-m2*L2^2*d1)*d1/(m1^2*L1^4))";
  CHECK(same_ideal(ann(r1, r1.rows({{"m1*L1^2*d^2+d1*d", "0", "m1*L1*d^2"},
                                    {"0", "m2*L2^2*d^2+d2*d+" + z2, "m2*L2*d^2"}})),
                   r1, {"m1*L1^2*d^2+d1*d"}));
  Ring r6({"g", "t", "m1", "L1", "L2", "d1", "k1"}, {"d"});
  std::string p = "m1*L1^2*d^2+d1*d+k1-m1*L1*g";
  CHECK(same_ideal(ann(r6, r6.rows({{p, "0", "L2*d^2"}, {"0", p, "t*L1*d^2"}})), r6, {p}));
}
