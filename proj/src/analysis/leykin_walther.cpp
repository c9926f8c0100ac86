#include "parametra/analysis/leykin_walther.hpp"

#include "parametra/analysis/homological.hpp"

namespace parametra {
namespace {

// Operator variables first, then parameters.
OpPoly adjoin(const OpPoly& f, const ParamPoly& scale) {
  const std::size_t nv = f.nvars(), np = f.nparams();
  std::vector<OpPoly::Term> terms;
  for (const auto& t : f.terms()) {
    ParamPoly c = *divide_exact(t.coeff.num() * scale, t.coeff.den());
    for (const auto& ct : c.terms()) {
      Monomial m(nv + np);
      for (std::size_t i = 0; i < nv; ++i) m[i] = t.mono[i];
      for (std::size_t i = 0; i < np; ++i) m[nv + i] = ct.mono[i];
      terms.push_back({std::move(m), ParamFraction::constant(0, ct.coeff)});
    }
  }
  return OpPoly::from_terms(0, nv + np, std::move(terms));
}

bool free_of_operators(const OpPoly& f, std::size_t nv) {
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < nv; ++i)
      if (t.mono[i] > 0) return false;
  return true;
}

ParamPoly parameter_part(const OpPoly& f, std::size_t nv, std::size_t np) {
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(np);
    for (std::size_t i = 0; i < np; ++i) m[i] = t.mono[nv + i];
    terms.push_back({std::move(m), t.coeff.rational_value()});
  }
  return ParamPoly::from_terms(np, std::move(terms));
}

}  // namespace

LeykinWaltherResult leykin_walther(const ModMatrix& M, std::size_t max_pairs) {
  const std::size_t nv = M.nvars(), np = M.nparams(), s = M.rows();
  ModMatrix N(0, nv + np, s);
  for (const ModElement& c : M.columns()) {
    ParamPoly den = ParamPoly::constant(np, 1);
    for (const OpPoly& e : c.entries())
      for (const auto& t : e.terms()) den = lcm(den, t.coeff.den());
    std::vector<OpPoly> entries;
    for (const OpPoly& e : c.entries()) entries.push_back(adjoin(e, den));
    N.push_back(s ? ModElement(std::move(entries)) : ModElement(0, nv + np, 0));
  }
  MonoOrder mono = MonoOrder::product(MonoOrder::degrevlex(nv), MonoOrder::degrevlex(np));
  ModOrder order(mono, ModScheme::PositionOverTerm);
  GroebnerOptions opts;
  opts.max_pairs = max_pairs;
  ModMatrix G = groebner_basis(N, order, opts);

  LeykinWaltherResult out;
  out.basis_size = G.cols();
  ModMatrix ann(0, nv + np, 1);
  for (const OpPoly& a : annihilator(ModMatrix::identity(0, nv + np, s), G, order)) ann.push_back(ModElement({a}));
  ModMatrix QN(0, nv + np, 1);
  ModMatrix ann_basis = groebner_basis(ann, order, opts);
  for (const ModElement& a : ann_basis.columns())
    if (free_of_operators(a[0], nv)) QN.push_back(a);
  for (const ModElement& q : QN.columns()) out.quotient.push_back(parameter_part(q[0], nv, np).primitive_integer());

  out.h = ParamPoly::constant(np, 1);
  for (const ModElement& g : G.columns()) {
    bool inside = true;
    for (const OpPoly& e : g.entries())
      if (!normal_form(ModElement({e}), QN, order).is_zero()) inside = false;
    if (inside) continue;
    LeadTerm lt = *leading_term(g, order);
    std::vector<OpPoly::Term> coeff;
    for (const auto& t : g[lt.component].terms()) {
      bool same = true;
      for (std::size_t i = 0; i < nv; ++i) same = same && t.mono[i] == lt.mono[i];
      if (same) coeff.push_back(t);
    }
    out.h = out.h * parameter_part(OpPoly::from_terms(0, nv + np, std::move(coeff)), nv, np);
  }
  out.h = out.h.primitive_integer();
  return out;
}

bool zero_set_contains(const ParamPoly& h, const ParamPoly& f, const std::vector<ParamPoly>& positive) {
  ParamPoly w = h;
  for (const ParamPoly& p : positive) w = w * p;
  return in_radical(w, {f}, f.arity());
}

}  // namespace parametra
