#include "parametra/analysis/homological.hpp"

namespace parametra {
namespace {

// Generators of {x : A x = 0} where A has `ncols` columns.
ModMatrix kernel(const ModMatrix& A, std::size_t ncols, const ModOrder& order) {
  if (A.rows() == 0) return ModMatrix::identity(A.nparams(), A.nvars(), ncols);
  return syzygies(A, order);
}

// span(K) / (span(K) intersected with span(I)), presented on the columns of K.
PresentedModule subquotient(const ModMatrix& K, const ModMatrix& I, const ModOrder& order) {
  const std::size_t k = K.cols();
  ModMatrix S = syzygies(K.concat(I), order).select_rows(0, k);
  return PresentedModule(canonical_basis(S, order).transpose());
}

std::size_t search_bound(const ModMatrix& R, const AnalysisOptions& opts) {
  return opts.max_ext.value_or(R.nvars());
}

ModMatrix row_canonical(const ModMatrix& rows, const ModOrder& order) {
  return canonical_basis(rows.transpose(), order).transpose();
}

}  // namespace

std::string_view verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Controllable: return "strongly controllable(flat)";
    case Verdict::NotControllable: return "not controllable";
    case Verdict::Autonomous: return "autonomous";
    case Verdict::NotAutonomous: return "not autonomous";
  }
  return "";
}

std::vector<ResolutionStep> free_resolution(const PresentedModule& M, std::size_t length, const ModOrder& order) {
  std::vector<ResolutionStep> steps;
  ModMatrix D = M.relation_vectors();
  for (std::size_t i = 0; i < length; ++i) {
    steps.push_back({D, D.cols(), D.rows()});
    if (D.cols() == 0) break;
    D = syzygies(D, order);
  }
  return steps;
}

std::vector<ExtModule> ext_modules(const PresentedModule& M, std::size_t max_index, const ModOrder& order) {
  std::vector<ResolutionStep> res = free_resolution(M, max_index + 1, order);
  const ModMatrix& R = M.relations();
  auto step = [&](std::size_t i) -> ModMatrix {
    if (i < res.size()) return res[i].map;
    std::size_t rows = res.back().map.cols();
    return ModMatrix(R.nparams(), R.nvars(), rows);
  };
  std::vector<ExtModule> out;
  for (std::size_t i = 0; i <= max_index; ++i) {
    ModMatrix next = step(i);
    ModMatrix K = kernel(next.transpose(), next.rows(), order);
    ModMatrix I = i == 0 ? ModMatrix(R.nparams(), R.nvars(), next.rows()) : step(i - 1).transpose();
    ExtModule e;
    e.index = i;
    ModMatrix GI = groebner_basis(I, order);
    for (const ModElement& c : K.columns())
      if (!in_span(GI, c, order)) e.vanishes = false;
    e.presentation = e.vanishes ? PresentedModule(ModMatrix::identity(R.nparams(), R.nvars(), 0))
                                : subquotient(K, I, order);
    out.push_back(std::move(e));
  }
  return out;
}

bool hom_vanishes(const PresentedModule& M, const ModOrder& order) {
  const ModMatrix& R = M.relations();
  return kernel(R, R.cols(), order).cols() == 0;
}

std::vector<OpPoly> annihilator(const ModMatrix& gens, const ModMatrix& relations, const ModOrder& order) {
  const std::size_t q = gens.rows(), k = gens.cols(), np = gens.nparams(), nv = gens.nvars();
  if (relations.rows() != q) throw ShapeError("annihilator: rank mismatch");
  ModMatrix B(np, nv, k * q);
  ModElement stacked(np, nv, k * q);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < q; ++i) stacked[j * q + i] = gens.at(i, j);
  B.push_back(stacked);
  for (std::size_t j = 0; j < k; ++j)
    for (const ModElement& r : relations.columns()) {
      ModElement c(np, nv, k * q);
      for (std::size_t i = 0; i < q; ++i) c[j * q + i] = r[i];
      B.push_back(c);
    }
  ModMatrix first = k == 0 ? ModMatrix::identity(np, nv, 1) : syzygies(B, order).select_rows(0, 1);
  ModOrder scalar = order.without_tags();
  std::vector<OpPoly> out;
  ModMatrix basis = canonical_basis(first, scalar);
  for (const ModElement& g : basis.columns()) out.push_back(g[0]);
  return out;
}

std::vector<OpPoly> annihilator(const PresentedModule& M, const ModOrder& order) {
  const ModMatrix& R = M.relations();
  return annihilator(ModMatrix::identity(R.nparams(), R.nvars(), R.cols()), R.transpose(), order);
}

ModMatrix kernel_representation(const PresentedModule& M, const ModOrder& order) {
  const ModMatrix& R = M.relations();
  ModMatrix Q = kernel(R, R.cols(), order);
  if (Q.cols() == 0) return ModMatrix::identity(R.nparams(), R.nvars(), R.cols());
  return row_canonical(left_kernel(Q, order), order);
}

std::vector<OpPoly> torsion_annihilator(const PresentedModule& M, const ModOrder& order) {
  ModMatrix Rp = kernel_representation(M, order);
  return annihilator(Rp.transpose(), M.relation_vectors(), order);
}

AnalysisReport control_analysis(const PresentedModule& M, const ModOrder& order, const AnalysisOptions& opts) {
  const ModMatrix& R = M.relations();
  AnalysisReport rep;
  rep.kind = AnalysisReport::Kind::Control;
  std::size_t bound = std::max<std::size_t>(search_bound(R, opts), 1);
  std::vector<ExtModule> ext = ext_modules(M.transposed(), bound, order);
  for (std::size_t i = 1; i < ext.size(); ++i)
    if (!ext[i].vanishes) {
      rep.first_nonzero_ext = static_cast<int>(i);
      break;
    }
  rep.image_rep = canonical_basis(kernel(R, R.cols(), order), order);
  if (rep.first_nonzero_ext == -1) {
    rep.verdict = Verdict::Controllable;
    if (rep.image_rep->cols() > 0) {
      auto L = left_inverse(*rep.image_rep, order);
      if (L) rep.left_inverse = *L;
    }
    if (opts.genericity) rep.genericity = genericity(R, order);
  } else {
    rep.verdict = Verdict::NotControllable;
    rep.kernel_rep = kernel_representation(M, order);
    rep.obstruction = ext[rep.first_nonzero_ext].presentation;
    rep.torsion_annihilator = rep.first_nonzero_ext == 1 ? annihilator(*rep.obstruction, order)
                                                          : torsion_annihilator(M, order);
  }
  rep.dimension = system_dimension(M, order);
  return rep;
}

AnalysisReport autonomy_analysis(const PresentedModule& M, const ModOrder& order, const AnalysisOptions& opts) {
  const ModMatrix& R = M.relations();
  AnalysisReport rep;
  rep.kind = AnalysisReport::Kind::Autonomy;
  std::vector<ExtModule> ext = ext_modules(M, search_bound(R, opts), order);
  for (std::size_t i = 0; i < ext.size(); ++i)
    if (!ext[i].vanishes) {
      rep.first_nonzero_ext = static_cast<int>(i);
      break;
    }
  rep.verdict = hom_vanishes(M, order) ? Verdict::Autonomous : Verdict::NotAutonomous;
  if (rep.verdict == Verdict::NotAutonomous) rep.kernel_rep = kernel_representation(M, order);
  rep.column_rank = column_rank(R, order);
  rep.dimension = system_dimension(M, order);
  return rep;
}

}  // namespace parametra
