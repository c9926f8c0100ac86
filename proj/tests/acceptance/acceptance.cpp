#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/instances.hpp"
#include "../unit/helpers.hpp"
#include "parametra/analysis/genericity.hpp"
#include "parametra/analysis/homological.hpp"
#include "parametra/analysis/leykin_walther.hpp"
#include "parametra/analysis/strata.hpp"
#include "parametra/arith/factorize.hpp"
#include "parametra/cli/interpreter.hpp"
#include "parametra/engine/module_ops.hpp"
#include "parametra/engine/specialize.hpp"

using namespace parametra;
using testing::Ring;

namespace {

class Checks {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

// a = c * b entrywise for a nonzero rational c.
bool rational_multiple(const std::vector<OpPoly>& a, const std::vector<OpPoly>& b) {
  if (a.size() != b.size()) return false;
  std::size_t i = 0;
  while (i < b.size() && b[i].is_zero()) ++i;
  if (i == b.size()) return std::all_of(a.begin(), a.end(), [](const OpPoly& p) { return p.is_zero(); });
  if (a[i].is_zero()) return false;
  ParamFraction c = a[i].terms().front().coeff / b[i].terms().front().coeff;
  if (!c.is_rational()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == c * b[k])) return false;
  return true;
}

std::vector<OpPoly> entries(const ModMatrix& m) {
  std::vector<OpPoly> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

std::vector<OpPoly> polys(const Ring& r, const std::vector<std::string>& s) {
  std::vector<OpPoly> out;
  for (const std::string& x : s) out.push_back(r.p(x));
  return out;
}

// Principal ideals with generators equal up to a rational factor.
bool same_ideal(const std::vector<OpPoly>& a, const Ring& r, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!rational_multiple({a[i]}, {r.p(b[i])}) && !(canonize(a[i]) == canonize(r.p(b[i])))) return false;
  return true;
}

bool same_set(std::vector<ParamPoly> a, std::vector<ParamPoly> b) {
  auto norm = [](std::vector<ParamPoly>& v) {
    for (ParamPoly& p : v) p = p.monic();
    std::sort(v.begin(), v.end(), [](const ParamPoly& x, const ParamPoly& y) { return compare_polys(x, y) < 0; });
  };
  norm(a);
  norm(b);
  return a == b;
}

// Equal up to column permutation.
bool same_columns(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<bool> used(b.cols(), false);
  for (const ModElement& c : a.columns()) {
    bool found = false;
    for (std::size_t j = 0; j < b.cols() && !found; ++j)
      if (!used[j] && c == b.column(j)) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

std::vector<Constraint> positive_all(std::size_t n) {
  std::vector<Constraint> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back({i, Sign::Positive});
  return c;
}

std::vector<ParamPoly> parameter_list(const Ring& r) {
  std::vector<ParamPoly> out;
  for (std::size_t i = 0; i < r.np(); ++i) out.push_back(ParamPoly::variable(r.np(), i));
  return out;
}

// Map onto a ring with fewer parameters, each image given as text over it.
ParamMap substitution(const Ring& target, const std::vector<std::string>& images) {
  ParamMap m;
  m.target_params = target.np();
  for (const std::string& s : images) m.images.push_back(target.pf(s));
  return m;
}

std::vector<std::pair<std::size_t, Monomial>> leading_module(const ModMatrix& G, const ModOrder& order) {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (const ModElement& c : G.columns()) {
    auto lt = leading_term(c, order);
    out.push_back({lt->component, lt->mono});
  }
  return out;
}

Ring bipendulum_ring() { return Ring({"g", "l1", "l2"}, {"d"}); }
ModMatrix bipendulum(const Ring& r, const std::string& l1, const std::string& l2) {
  return r.rows({{"d^2+g/" + l1, "0", "-g/" + l1}, {"0", "d^2+g/" + l2, "-g/" + l2}});
}

Ring pendula_ring() { return Ring({"g", "m1", "m2", "L1", "L2"}, {"d"}); }
ModMatrix pendula(const Ring& r) {
  return r.rows({{"L1*d^2-g", "0", "m1*L1*d^2"}, {"0", "L2*d^2-g", "m2*L2*d^2"}});
}

Ring friction_ring() { return Ring({"L1", "L2", "d1", "d2", "z1", "z2", "m1", "m2"}, {"d"}); }
ModMatrix friction(const Ring& r) {
  return r.rows({{"L1*d^2+d1*d+z1", "0", "m1*L1*d^2"}, {"0", "L2*d^2+d2*d+z2", "m2*L2*d^2"}});
}

void criterion1(Checks& check) {
  Ring r = bipendulum_ring();
  AnalysisReport a = control_analysis(PresentedModule(bipendulum(r, "l1", "l2")), r.order);
  check(a.first_nonzero_ext == -1, "first nonzero Ext");
  check(a.verdict == Verdict::Controllable, "verdict");
  bool image = a.image_rep && a.image_rep->cols() == 1 &&
               rational_multiple(entries(*a.image_rep),
                                 polys(r, {"(-g*l2)*d^2-g^2", "(-g*l1)*d^2-g^2", "(-l1*l2)*d^4+(-g*l1-g*l2)*d^2-g^2"}));
  check(image, "image representation");
  bool inverse = a.left_inverse && a.left_inverse->rows() == 1 &&
                 rational_multiple(entries(*a.left_inverse),
                                   polys(r, {"(-l1)/(g^2*l1-g^2*l2)", "l2/(g^2*l1-g^2*l2)", "0"}));
  check(inverse, "left inverse");
  check(a.left_inverse && a.image_rep && *a.left_inverse * *a.image_rep == ModMatrix::identity(3, 1, 1),
        "left inverse times image representation");
  check(a.dimension == 1, "dimension");
  check(a.genericity && same_set(a.genericity->factors, {r.pp("g"), r.pp("l1-l2")}), "obstructions");
}

void criterion2(Checks& check) {
  Ring r({"g", "l"}, {"d"});
  PresentedModule M(bipendulum(r, "l", "l"));
  AnalysisReport a = control_analysis(M, r.order);
  check(a.first_nonzero_ext == 1, "first nonzero Ext");
  check(a.verdict == Verdict::NotControllable, "control verdict");
  check(same_ideal(a.torsion_annihilator, r, {"l*d^2+g"}), "torsion annihilator");
  AnalysisReport b = autonomy_analysis(M, r.order);
  check(b.verdict == Verdict::NotAutonomous, "autonomy verdict");
  check(b.column_rank == 2u, "column rank");
  check(b.dimension == 1, "dimension");

  Ring g = bipendulum_ring();
  ParamMap eq = substitution(r, {"g", "l", "l"});
  check(control_analysis(PresentedModule(apply(eq, bipendulum(g, "l1", "l2"))), r.order).torsion_annihilator ==
            a.torsion_annihilator,
        "specialized generic system");
}

void criterion3(Checks& check) {
  Ring r = pendula_ring();
  ModMatrix F = pendula(r);
  ModMatrix G = groebner_basis(F, r.order);
  ModMatrix I = ModMatrix::identity(r.np(), r.nv(), 2);
  check(same_columns(G, I), "generic reduced basis");
  ModMatrix T = lift(F, I, r.order);
  ModMatrix expected = r.rows({
      {"L1*L2/(g^2*L1-g^2*L2)*d^2-1/g", "-m1*L1*L2/(g^2*m2*L1-g^2*m2*L2)*d^2"},
      {"m2*L1*L2/(g^2*m1*L1-g^2*m1*L2)*d^2", "-L1*L2/(g^2*L1-g^2*L2)*d^2-1/g"},
      {"-L1*L2/(g^2*m1*(L1-L2))*d^2+L1/(g*m1*(L1-L2))", "L1*L2/(g^2*m2*(L1-L2))*d^2-L2/(g*m2*(L1-L2))"},
  });
  check(T == expected, "transformation matrix");
  check(F * T == I, "F T = I");
  ParamPoly l = ParamPoly::constant(r.np(), 1);
  for (const OpPoly& e : entries(T))
    for (const auto& t : e.terms()) l = lcm(l, t.coeff.den());
  check(l == r.pp("m1*m2*g^2*(L1-L2)").monic(), "denominator lcm");
  ObstructionSet s = admissibility_filter(genericity(F, r.order), positive_all(r.np()));
  check(s.factors == std::vector<ParamPoly>{r.pp("L1-L2")}, "admissible obstructions");

  Ring e({"g", "m1", "m2", "L"}, {"d"});
  ModMatrix Fe = apply(substitution(e, {"g", "m1", "m2", "L", "L"}), F);
  ModMatrix Ge = groebner_basis(Fe, e.order);
  check(same_columns(Ge, e.rows({{"0", "1"}, {"d^2-g/L", "m2/m1"}})), "equal-length basis");
  check(same_ideal(control_analysis(PresentedModule(Fe), e.order).torsion_annihilator, e, {"L*d^2-g"}),
        "equal-length annihilator");
}

void criterion4(Checks& check) {
  Ring r = friction_ring();
  ModMatrix F = friction(r);
  ParamPoly P = r.pp("L1^2*z2^2-2*L1*L2*z1*z2-L1*d1*d2*z2+L1*d2^2*z1+L2^2*z1^2+L2*d1^2*z2-L2*d1*d2*z1");
  check(P == r.pp("(L2*z1-L1*z2)^2+(L2*d1-L1*d2)*(d1*z2-d2*z1)"), "sum of products expands to P");
  std::vector<Constraint> pos;
  for (std::size_t i : {0, 1, 2, 3, 6, 7}) pos.push_back({i, Sign::Positive});
  ObstructionSet s = admissibility_filter(genericity(F, r.order), pos);
  check(same_set(s.factors, {r.pp("z1"), r.pp("z2"), P}), "friction obstructions");

  std::vector<Stratum> strata = stratify_lc({r.pp("z1"), r.pp("z2"), P}, r.np());
  check(strata.size() == 6, "six strata");
  std::vector<Stratum> patterns = sign_patterns({r.pp("z1"), r.pp("z2"), P});
  std::erase_if(patterns, [&](const Stratum& x) { return same_set(x.inequations, {P}); });
  check(patterns.size() == 6, "one pattern certified empty");
  for (std::size_t i = 0; i < std::min(strata.size(), patterns.size()); ++i) {
    std::vector<ParamPoly> basis = ideal_basis(patterns[i].equations, r.np());
    bool same = same_set(strata[i].inequations, patterns[i].inequations);
    for (const ParamPoly& e : strata[i].equations) same = same && ideal_member(e, basis);
    for (const ParamPoly& e : patterns[i].equations) same = same && ideal_member(e, strata[i].equations);
    check(same, "stratum " + std::to_string(i + 1) + " matches its sign pattern");
  }
  for (const Stratum& st : strata) check(st.status == Stratum::Status::Nonempty, "stratum status");

  Ring c1({"g", "m1", "m2", "L1", "L2", "d1", "d2"}, {"d"});
  auto ann = [](const Ring& q, const ModMatrix& R) {
    return control_analysis(PresentedModule(R), q.order).torsion_annihilator;
  };
  check(same_ideal(ann(c1, c1.rows({{"m1*L1^2*d^2+d1*d", "0", "m1*L1*d^2"}, {"0", "m2*L2^2*d^2+d2*d", "m2*L2*d^2"}})),
                   c1, {"d"}),
        "case 1 annihilator");

  Ring k({"k1", "k2", "m1", "m2", "L1", "L2", "d1", "d2", "g"}, {"d"});
  ParamPoly Pk = k.pp(
      "k1^2*L2^4*m2^2-2*k1*k2*L1^2*L2^2*m1*m2-k1*d1*d2*L2^2*m2+k1*d2^2*L1^2*m1+2*k1*g*L1^2*L2^3*m1*m2^2-"
      "2*k1*g*L1*L2^4*m1*m2^2+k2^2*L1^4*m1^2+k2*d1^2*L2^2*m2-k2*d1*d2*L1^2*m1-2*k2*g*L1^4*L2*m1^2*m2+"
      "2*k2*g*L1^3*L2^2*m1^2*m2-d1^2*g*L2^3*m2^2+d1*d2*g*L1^2*L2*m1*m2+d1*d2*g*L1*L2^2*m1*m2-d2^2*g*L1^3*m1^2+"
      "g^2*L1^4*L2^2*m1^2*m2^2-2*g^2*L1^3*L2^3*m1^2*m2^2+g^2*L1^2*L2^4*m1^2*m2^2");
  IdealOptions o;
  o.order = MonoOrder::weighted({1, 1, 0, 0, 0, 0, 0, 0, 0}, MonoOrder::degrevlex(9));
  auto comps = fact_gb({Pk, k.pp("k1-m1*L1*g")}, {k.pp("k2-m2*L2*g")}, k.np(), o);
  check(comps.size() == 1 && comps[0].size() == 2 &&
            same_set(comps[0], {k.pp("k1-g*m1*L1"), k.pp("k2*m1^2*L1^4-g*m1^2*m2*L1^4*L2+m2*L2^2*d1^2-m1*L1^2*d1*d2")}),
        "case 2 components");
  std::string z2 = "((m1*L1^2*d2-m2*L2^2*d1)*d1/(m1^2*L1^4))";
  check(same_ideal(ann(c1, c1.rows({{"m1*L1^2*d^2+d1*d", "0", "m1*L1*d^2"},
                                    {"0", "m2*L2^2*d^2+d2*d+" + z2, "m2*L2*d^2"}})),
                   c1, {"m1*L1^2*d^2+d1*d"}),
        "case 2 annihilator");

  Ring u({"g", "m1", "m2", "L1", "L2", "d1", "d2", "k1", "k2", "u"}, {"d"});
  ModMatrix Fu = u.rows({{"m1*L1^2*d^2+d1*d", "0", "m1*L1*d^2"}, {"0", "m2*L2^2*d^2+d2*d+u", "m2*L2*d^2"}});
  check(same_set(genericity(Fu, u.order).factors,
                 {u.pp("u"), u.pp("m2"), u.pp("L2"), u.pp("d1"), u.pp("m1^2*L1^4*u-m1*L1^2*d1*d2+m2*L2^2*d1^2")}),
        "case 3 obstructions");

  Ring r6({"g", "t", "m1", "L1", "L2", "d1", "k1"}, {"d"});
  std::string p = "m1*L1^2*d^2+d1*d+k1-m1*L1*g";
  check(same_ideal(ann(r6, r6.rows({{p, "0", "L2*d^2"}, {"0", p, "t*L1*d^2"}})), r6, {p}), "case 6 annihilator");

  // Both roots s and -s of s^2 = d2^2 - 4 m2 L2^2 z2.
  for (const char* root : {"s", "(-s)"}) {
    std::string script = std::string(R"(ring rs = (0,m1,m2,L1,L2,d1,d2,z1,z2),(d),(c,dp);
matrix RS = [m1*L1^2*d^2+d1*d+z1, 0, m1*L1*d^2], [0, m2*L2^2*d^2+d2*d+z2, m2*L2*d^2];
specialize d1 = (d2*(m2*L2^2*z1+m1*L1^2*z2)+(m2*L2^2*z1-m1*L1^2*z2)*)") +
                         root + R"()/(2*m2*L2^2*z2);
specialize z2 = (d2^2-s^2)/(4*m2*L2^2);
control(RS);
)";
    nlohmann::json rep = cli::run(cli::parse_script(script));
    const nlohmann::json& res = rep["results"].back();
    std::vector<std::string> params = res["ring"]["params"];
    Ring rs(params, {"d"});
    std::vector<OpPoly> got_ann;
    for (const auto& g : res["result"]["torsion_annihilator"]) got_ann.push_back(rs.p(g.get<std::string>()));
    std::string want = std::string("2*m2*L2^2*d+d2-") + root;
    check(same_ideal(got_ann, rs, {want}), std::string("radical adjunction with root ") + root);
  }
}

void criterion5(Checks& check) {
  Ring r({"a", "b"}, {"d"});
  Ring rb({"b"}, {"d"}), ra({"a"}, {"d"}), r0({}, {"d"});
  ModMatrix N = r.rows({{"a*d+b"}});
  ModMatrix D = r.rows({{"0", "0"}, {"0", "a*d+b"}});

  check(autonomy_analysis(PresentedModule(N), r.order).verdict == Verdict::Autonomous, "generic autonomy");
  check(same_ideal(torsion_annihilator(PresentedModule(N), r.order), r, {"a*d+b"}), "generic annihilator");

  std::vector<Stratum> strata = stratify_lc({r.pp("a"), r.pp("b")}, 2);
  check(strata.size() == 3, "three strata");

  ModMatrix Nb = apply(substitution(rb, {"0", "b"}), N);
  AnalysisReport zero = autonomy_analysis(PresentedModule(Nb), rb.order);
  check(zero.verdict == Verdict::Autonomous && system_dimension(PresentedModule(Nb), rb.order) == -1,
        "a=0, b!=0 gives the zero module");
  ModMatrix N0 = apply(substitution(r0, {"0", "0"}), N);
  check(control_analysis(PresentedModule(N0), r0.order).verdict == Verdict::Controllable &&
            1 - column_rank(N0, r0.order) == 1,
        "a=b=0 gives a free module of rank 1");

  AnalysisReport dc = control_analysis(PresentedModule(D), r.order);
  check(dc.verdict == Verdict::NotControllable && same_ideal(dc.torsion_annihilator, r, {"a*d+b"}),
        "direct sum generic annihilator");
  ModMatrix Da = apply(substitution(ra, {"a", "0"}), D);
  check(same_ideal(control_analysis(PresentedModule(Da), ra.order).torsion_annihilator, ra, {"d"}),
        "a!=0, b=0 annihilator");
  ModMatrix Db = apply(substitution(rb, {"0", "b"}), D);
  check(control_analysis(PresentedModule(Db), rb.order).verdict == Verdict::Controllable &&
            2 - column_rank(Db, rb.order) == 1,
        "a=0, b!=0 gives a free module of rank 1");
  ModMatrix D0 = apply(substitution(r0, {"0", "0"}), D);
  check(control_analysis(PresentedModule(D0), r0.order).verdict == Verdict::Controllable &&
            2 - column_rank(D0, r0.order) == 2,
        "a=b=0 gives a free module of rank 2");
}

void criterion6(Checks& check) {
  testing::InstanceGenerator gen(2024);
  int inverses = 0;
  for (int i = 0; i < 200; ++i) {
    bool with_param = i % 2 == 0;
    ModMatrix F = gen.matrix(with_param);
    ModOrder o = gen.order(with_param);
    Trinity t = trinity(F, o);
    std::string tag = " on instance " + std::to_string(i);
    check(t.gb == F * t.transform, "H = F T" + tag);
    check((F * t.syzygies).is_zero(), "F S = 0" + tag);
    check(is_groebner_basis(t.gb, o), "Buchberger criterion" + tag);
    ModMatrix G = groebner_basis(F, o);
    check(is_groebner_basis(G, o), "Buchberger criterion (reduced)" + tag);
    if (auto L = left_inverse(F, o)) {
      ++inverses;
      check(*L * F == ModMatrix::identity(F.nparams(), F.nvars(), F.cols()), "L M = Id" + tag);
    }
    if (auto R = right_inverse(F, o)) check(F * *R == ModMatrix::identity(F.nparams(), F.nvars(), F.rows()), "M R = Id" + tag);
  }
  check(inverses > 0, "some left inverse exists");

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(1, 40);
  struct Example {
    Ring ring;
    ModMatrix F;
  };
  Ring rb = bipendulum_ring(), rp = pendula_ring(), rf = friction_ring(), rd({"a", "b"}, {"d"});
  std::vector<Example> examples{{rb, bipendulum(rb, "l1", "l2")},
                                {rp, pendula(rp)},
                                {rf, friction(rf)},
                                {rd, rd.rows({{"0", "0"}, {"0", "a*d+b"}})}};
  for (const Example& e : examples) {
    const Ring& r = e.ring;
    ModMatrix G = groebner_basis(e.F, r.order);
    check(is_groebner_basis(G, r.order), "Buchberger criterion on an example");
    ObstructionSet s = genericity(e.F, r.order);
    int checked = 0, attempts = 0;
    while (checked < 20 && attempts++ < 1000) {
      std::vector<BigRational> pt;
      for (std::size_t i = 0; i < r.np(); ++i) pt.push_back(BigRational(val(rng), val(rng) % 3 + 1));
      bool generic = true;
      for (const ParamPoly& f : s.factors) generic = generic && f.evaluate(pt) != 0;
      for (const ParamPoly& f : s.normalization_only) generic = generic && f.evaluate(pt) != 0;
      if (!generic) continue;
      ParamMap map = rational_point(pt);
      ModMatrix Fs, Gs;
      try {
        Fs = apply(map, e.F);
        Gs = apply(map, G);
      } catch (const DomainError&) {
        continue;
      }
      ++checked;
      ModMatrix direct = groebner_basis(Fs, r.order);
      check(leading_module(direct, r.order) == leading_module(Gs, r.order) &&
                canonical_basis(direct, r.order) == canonical_basis(Gs, r.order),
            "specialization coherence");
    }
    check(checked == 20, "twenty admissible points");
  }

  StratifyOptions keep;
  keep.prune = false;
  keep.decompose = false;
  std::vector<ParamPoly> P;
  for (std::size_t n = 1; n <= 4; ++n) {
    P.push_back(ParamPoly::variable(4, n - 1) * ParamPoly::variable(4, n % 4) + ParamPoly::constant(4, static_cast<long>(n)));
    check(sign_patterns(P).size() == (std::size_t{1} << n) - 1, "sign patterns for n=" + std::to_string(n));
    check(stratify_lc(P, 4, keep).size() == (std::size_t{1} << n) - 1, "sign systems for n=" + std::to_string(n));
  }

  Ring q({"x", "y", "z"}, {"d"});
  const char* atoms[] = {"x", "y", "z", "x-y", "y+z+1", "x*z-1", "x^2-y"};
  std::uniform_int_distribution<int> pick(0, 6);
  for (int trial = 0; trial < 25; ++trial) {
    std::string f = std::string("(") + atoms[pick(rng)] + ")*(" + atoms[pick(rng)] + ")";
    std::vector<ParamPoly> I{q.pp(f), q.pp(atoms[pick(rng)])}, J{q.pp(atoms[pick(rng)])};
    for (const auto& c : fact_gb(I, J, 3)) {
      for (const ParamPoly& i : I) check(ideal_member(i, c), "fact_gb component contains the input");
      for (const ParamPoly& j : J) check(!in_radical(j, c, 3), "fact_gb component avoids the inequations");
    }
  }
}

void criterion7(Checks& check) {
  auto run = [&](const Ring& r, const ModMatrix& F, const std::string& name) {
    LeykinWaltherResult lw = leykin_walther(F);
    ParamPoly h = squarefree_part(lw.h);
    std::vector<ParamPoly> pos = parameter_list(r);
    ObstructionSet s = admissibility_filter(genericity(F, r.order), positive_all(r.np()));
    check(!s.factors.empty(), name + ": admissible obstructions");
    for (const ParamPoly& f : s.factors) check(zero_set_contains(h, f, pos), name + ": V(h) contains V(f)");
  };
  Ring rb = bipendulum_ring(), rp = pendula_ring();
  run(rb, bipendulum(rb, "l1", "l2"), "bipendulum");
  run(rp, pendula(rp), "pendula");
}

}  // namespace

int main() {
  const std::vector<std::function<void(Checks&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                           criterion5, criterion6, criterion7};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks check;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(secs < 10.0, "time limit");
    bool ok = check.failures().empty();
    failed += !ok;
    std::printf("criterion %zu: %s (%.2f s)\n", i + 1, ok ? "PASS" : "FAIL", secs);
    for (const std::string& f : check.failures()) std::printf("  failed: %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
