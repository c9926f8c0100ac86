#pragma once

#include <string>
#include <vector>

#include "parametra/engine/groebner.hpp"

namespace parametra {

struct ObstructionSet {
  // Monic, squarefree, pairwise distinct, ascending by degree then print.
  std::vector<ParamPoly> factors;
  // Factors removed by admissibility_filter.
  std::vector<ParamPoly> excluded;
  // Factors that only occurred as monic-normalization denominators.
  std::vector<ParamPoly> normalization_only;
};

// Denominators of T_kj with T_kj != 0 and M_ik != 0, where i is the leading
// component of the j-th column of M * T, plus the normalization denominators
// of `log`. Throws ShapeError on mismatch.
ObstructionSet genericity(const ModMatrix& M, const ModMatrix& T, const ModOrder& order,
                          const DenominatorLog* log = nullptr);

// genericity(M, lift(M, gb(M))) with normalization events recorded.
ObstructionSet genericity(const ModMatrix& M, const ModOrder& order);

// Total degree, then number of terms, then earlier variables first.
bool factor_less(const ParamPoly& a, const ParamPoly& b);

// Dedupes and sorts factors of the given polynomials.
std::vector<ParamPoly> simplify_factors(const std::vector<ParamPoly>& polys);

enum class Sign { Positive, NonNegative, NonZero };

struct Constraint {
  std::size_t param = 0;
  Sign sign = Sign::Positive;
};

// Removes factors that cannot vanish under the constraints: monomials in
// positive or nonzero parameters, and polynomials in positive parameters
// whose coefficients all share one sign.
ObstructionSet admissibility_filter(const ObstructionSet& s, const std::vector<Constraint>& constraints);

}  // namespace parametra
