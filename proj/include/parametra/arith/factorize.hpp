#pragma once

#include <vector>

#include "parametra/arith/param_poly.hpp"

namespace parametra {

struct Factor {
  ParamPoly poly;
  unsigned multiplicity = 1;
};

// a = content * prod(poly^multiplicity). Factors are monic, nonconstant,
// squarefree and pairwise coprime, sorted ascending by compare_polys.
struct Factorization {
  BigRational content;
  std::vector<Factor> factors;
};

// Splits off single-parameter monomial factors, extracts contents
// recursively in every parameter, runs Yun's squarefree decomposition and
// then searches each piece for factors of degree one in some parameter.
// Irreducibility is not certified. Throws DomainError for a == 0.
Factorization squarefree_factors(const ParamPoly& a);

// The distinct monic factors only.
std::vector<ParamPoly> distinct_factors(const ParamPoly& a);

// Squarefree part (product of distinct factors), monic.
ParamPoly squarefree_part(const ParamPoly& a);

}  // namespace parametra
