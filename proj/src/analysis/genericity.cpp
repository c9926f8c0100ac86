#include "parametra/analysis/genericity.hpp"

#include <algorithm>

#include "parametra/arith/factorize.hpp"

namespace parametra {
namespace {

bool contains(const std::vector<ParamPoly>& v, const ParamPoly& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

bool factor_less(const ParamPoly& a, const ParamPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
  return compare_polys(a, b) > 0;
}

std::vector<ParamPoly> simplify_factors(const std::vector<ParamPoly>& polys) {
  std::vector<ParamPoly> out;
  for (const ParamPoly& p : polys) {
    if (p.is_zero() || p.is_constant()) continue;
    for (ParamPoly& f : distinct_factors(p))
      if (!contains(out, f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

ObstructionSet genericity(const ModMatrix& M, const ModMatrix& T, const ModOrder& order, const DenominatorLog* log) {
  if (M.cols() != T.rows()) throw ShapeError("genericity: M and T do not compose");
  ModMatrix G = M * T;
  std::vector<ParamPoly> dens;
  for (std::size_t j = 0; j < T.cols(); ++j) {
    auto lt = leading_term(G.column(j), order);
    if (!lt) continue;
    for (std::size_t k = 0; k < T.rows(); ++k) {
      if (T.at(k, j).is_zero() || M.at(lt->component, k).is_zero()) continue;
      for (const auto& t : T.at(k, j).terms()) dens.push_back(t.coeff.den());
    }
  }
  ObstructionSet s;
  s.factors = simplify_factors(dens);
  if (log) {
    std::vector<ParamPoly> norm;
    for (const DenominatorEvent& e : log->events())
      if (e.kind == DenominatorEvent::Kind::MonicNormalization) norm.push_back(e.denominator);
    for (const ParamPoly& f : simplify_factors(norm))
      if (!contains(s.factors, f)) s.normalization_only.push_back(f);
  }
  return s;
}

ObstructionSet genericity(const ModMatrix& M, const ModOrder& order) {
  DenominatorLog log;
  GroebnerOptions opts;
  opts.log = &log;
  ModMatrix G = groebner_basis(M, order, opts);
  ModMatrix T = lift(M, G, order);
  return genericity(M, T, order, &log);
}

ObstructionSet admissibility_filter(const ObstructionSet& s, const std::vector<Constraint>& constraints) {
  ObstructionSet out;
  out.normalization_only = s.normalization_only;
  auto sign_of = [&](std::size_t v) -> std::optional<Sign> {
    std::optional<Sign> r;
    for (const Constraint& c : constraints)
      if (c.param == v && (!r || c.sign == Sign::Positive)) r = c.sign;
    return r;
  };
  for (const ParamPoly& f : s.factors) {
    bool all_positive = true, all_nonzero = true;
    for (const auto& t : f.terms())
      for (std::size_t v = 0; v < t.mono.arity(); ++v) {
        if (t.mono[v] == 0) continue;
        auto sg = sign_of(v);
        if (sg != Sign::Positive) all_positive = false;
        if (!sg || *sg == Sign::NonNegative) all_nonzero = false;
      }
    bool monomial = f.terms().size() == 1;
    bool same_sign = std::all_of(f.terms().begin(), f.terms().end(),
                                 [&](const auto& t) { return (t.coeff > 0) == (f.leading_coeff() > 0); });
    bool cannot_vanish = (monomial && all_nonzero) || (all_positive && same_sign);
    (cannot_vanish ? out.excluded : out.factors).push_back(f);
  }
  return out;
}

}  // namespace parametra
