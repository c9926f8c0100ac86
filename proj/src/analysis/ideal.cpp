#include "parametra/analysis/ideal.hpp"

#include <numeric>

namespace parametra {
namespace {

ModOrder scalar_order(std::size_t arity, const IdealOptions& opts) {
  return ModOrder(opts.order.value_or(MonoOrder::degrevlex(arity)));
}

ModMatrix as_row(const std::vector<ParamPoly>& gens, std::size_t arity) {
  ModMatrix m(0, arity, 1);
  for (const ParamPoly& g : gens) {
    require_same_arity(arity, g.arity(), "ideal generator");
    if (!g.is_zero()) m.push_back(ModElement({as_operator(g)}));
  }
  return m;
}

ParamPoly extend(const ParamPoly& p, std::size_t arity) {
  std::vector<std::size_t> map(p.arity());
  std::iota(map.begin(), map.end(), 0);
  return p.remap(arity, map);
}

}  // namespace

OpPoly as_operator(const ParamPoly& p) {
  std::vector<OpPoly::Term> terms;
  for (const auto& t : p.terms()) terms.push_back({t.mono, ParamFraction::constant(0, t.coeff)});
  return OpPoly::from_terms(0, p.arity(), std::move(terms));
}

ParamPoly as_parameter(const OpPoly& p) {
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (!t.coeff.is_rational()) throw DomainError("as_parameter: non-rational coefficient");
    terms.push_back({t.mono, t.coeff.rational_value()});
  }
  return ParamPoly::from_terms(p.nvars(), std::move(terms));
}

std::vector<ParamPoly> ideal_basis(const std::vector<ParamPoly>& gens, std::size_t arity, const IdealOptions& opts) {
  GroebnerOptions g;
  g.max_pairs = opts.max_pairs;
  ModMatrix G = groebner_basis(as_row(gens, arity), scalar_order(arity, opts), g);
  std::vector<ParamPoly> out;
  for (const ModElement& c : G.columns()) out.push_back(as_parameter(c[0]).primitive_integer());
  return out;
}

bool contains_one(const std::vector<ParamPoly>& gens, std::size_t arity, const IdealOptions& opts) {
  std::vector<ParamPoly> b = ideal_basis(gens, arity, opts);
  return b.size() == 1 && b[0].is_constant();
}

bool ideal_member(const ParamPoly& f, const std::vector<ParamPoly>& basis, const IdealOptions& opts) {
  ModMatrix G = as_row(basis, f.arity());
  return normal_form(ModElement({as_operator(f)}), G, scalar_order(f.arity(), opts)).is_zero();
}

bool no_common_zero(const std::vector<ParamPoly>& gens, const std::vector<ParamPoly>& nonzero,
                    std::size_t arity, const IdealOptions& opts) {
  const std::size_t k = nonzero.size();
  const std::size_t n = arity + k;
  std::vector<ParamPoly> ext;
  for (const ParamPoly& g : gens) ext.push_back(extend(g, n));
  for (std::size_t i = 0; i < k; ++i)
    ext.push_back(ParamPoly::constant(n, 1) - ParamPoly::variable(n, arity + i) * extend(nonzero[i], n));
  IdealOptions e = opts;
  if (opts.order && k > 0) e.order = MonoOrder::product(*opts.order, MonoOrder::degrevlex(k));
  return contains_one(ext, n, e);
}

bool in_radical(const ParamPoly& f, const std::vector<ParamPoly>& gens, std::size_t arity, const IdealOptions& opts) {
  if (f.is_zero()) return true;
  return no_common_zero(gens, {f}, arity, opts);
}

}  // namespace parametra
