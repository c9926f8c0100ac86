#pragma once

#include <vector>

#include "parametra/analysis/ideal.hpp"

namespace parametra {

struct Stratum {
  enum class Status { Nonempty, Empty, Unknown };
  // Groebner basis of the equations (= 0).
  std::vector<ParamPoly> equations;
  // Inequations (!= 0).
  std::vector<ParamPoly> inequations;
  Status status = Status::Unknown;
  // Split of the equations into components avoiding the inequations.
  std::vector<std::vector<ParamPoly>> components;
};

std::string_view status_text(Stratum::Status s);

// Components whose union of zero sets contains V(I) \ V(J) and lies in
// V(I). Splits basis elements along their distinct factors, drops
// components on which some j vanishes identically and redundant ones.
std::vector<std::vector<ParamPoly>> fact_gb(const std::vector<ParamPoly>& I, const std::vector<ParamPoly>& J,
                                            std::size_t arity, const IdealOptions& opts = {});

// The 2^n - 1 sign systems over P, all-nonzero excluded, in lexicographic
// order of patterns with "= 0" before "!= 0" and the first polynomial most
// significant.
std::vector<Stratum> sign_patterns(const std::vector<ParamPoly>& P);

struct StratifyOptions {
  IdealOptions ideal;
  // Drop strata certified empty.
  bool prune = true;
  // Fill Stratum::components.
  bool decompose = true;
};

// Sign systems with equations replaced by their Groebner basis and
// emptiness certified by the Rabinowitsch test.
std::vector<Stratum> stratify_lc(std::vector<ParamPoly> P, std::size_t arity, const StratifyOptions& opts = {});

}  // namespace parametra
