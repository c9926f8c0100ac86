#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "parametra/analysis/genericity.hpp"
#include "parametra/engine/module_ops.hpp"

namespace parametra {

enum class Verdict { Controllable, NotControllable, Autonomous, NotAutonomous };
std::string_view verdict_text(Verdict v);

struct ResolutionStep {
  // Columns generate the syzygies of the previous step's columns.
  ModMatrix map;
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
};

// D_1 = R^T, D_{i+1} = syz(D_i) for i < length.
std::vector<ResolutionStep> free_resolution(const PresentedModule& M, std::size_t length, const ModOrder& order);

struct ExtModule {
  std::size_t index = 0;
  bool vanishes = true;
  // Ext^i presented by generators modulo relations.
  PresentedModule presentation{ModMatrix()};
};

// Ext^i(M, A) for i = 0..max_index.
std::vector<ExtModule> ext_modules(const PresentedModule& M, std::size_t max_index, const ModOrder& order);

// Hom(M, A) = 0.
bool hom_vanishes(const PresentedModule& M, const ModOrder& order);

// Canonized Groebner basis of {a : a * gens_j in span(relations) for all j}.
std::vector<OpPoly> annihilator(const ModMatrix& gens, const ModMatrix& relations, const ModOrder& order);
std::vector<OpPoly> annihilator(const PresentedModule& M, const ModOrder& order);

// Rows generate the relations of the controllable part M / t(M).
ModMatrix kernel_representation(const PresentedModule& M, const ModOrder& order);

// Ann(t(M)); {1} when M is torsion-free.
std::vector<OpPoly> torsion_annihilator(const PresentedModule& M, const ModOrder& order);

struct AnalysisOptions {
  // Highest Ext index searched; defaults to the number of operator variables.
  std::optional<std::size_t> max_ext;
  bool genericity = true;
};

struct AnalysisReport {
  enum class Kind { Control, Autonomy };
  Kind kind = Kind::Control;
  int first_nonzero_ext = -1;
  Verdict verdict = Verdict::Controllable;
  std::optional<ModMatrix> image_rep;
  std::optional<ModMatrix> left_inverse;
  std::optional<ModMatrix> kernel_rep;
  std::optional<PresentedModule> obstruction;
  std::vector<OpPoly> torsion_annihilator;
  std::optional<std::size_t> column_rank;
  int dimension = -1;
  std::optional<ObstructionSet> genericity;
};

// Controllability via Ext^i(N(M), A), i = 1..n.
AnalysisReport control_analysis(const PresentedModule& M, const ModOrder& order, const AnalysisOptions& opts = {});
// Autonomy via Ext^i(M, A), i = 0..n.
AnalysisReport autonomy_analysis(const PresentedModule& M, const ModOrder& order, const AnalysisOptions& opts = {});

}  // namespace parametra
