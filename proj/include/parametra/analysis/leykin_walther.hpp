#pragma once

#include "parametra/analysis/ideal.hpp"

namespace parametra {

struct LeykinWaltherResult {
  // Product of the parameter leading coefficients of the basis elements
  // outside Q_N * A^s.
  ParamPoly h;
  // Generators of Q_N = {p : p * A^s in N}.
  std::vector<ParamPoly> quotient;
  // Number of elements in the Groebner basis over Q[d, p].
  std::size_t basis_size = 0;
};

// Clears denominators column by column, adjoins the parameters as
// variables ranked below every operator monomial and computes a
// position-over-term Groebner basis of the column span.
LeykinWaltherResult leykin_walther(const ModMatrix& M, std::size_t max_pairs = 0);

// Every admissible obstruction f satisfies V(f) within V(h) away from the
// zeros of `positive`: 1 in <f, 1 - y * h * prod(positive)>.
bool zero_set_contains(const ParamPoly& h, const ParamPoly& f, const std::vector<ParamPoly>& positive);

}  // namespace parametra
