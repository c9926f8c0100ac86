#pragma once

#include <optional>
#include <span>
#include <vector>

#include "parametra/engine/module.hpp"

namespace parametra {

// Image of every parameter in a target field K(q_1,...,q_s).
struct ParamMap {
  std::size_t target_params = 0;
  std::vector<ParamFraction> images;
};

ParamMap rational_point(std::span<const BigRational> point);

// Throws DomainError when a denominator maps to zero.
ParamFraction apply(const ParamMap& map, const ParamFraction& c);
ParamPoly apply(const ParamMap& map, const ParamPoly& p);
OpPoly apply(const ParamMap& map, const OpPoly& p);
ModMatrix apply(const ParamMap& map, const ModMatrix& m);

// Value of p at rational parameter and operator-variable values.
BigRational evaluate(const OpPoly& p, std::span<const BigRational> params, std::span<const BigRational> vars);

// Rank over Q of a rational matrix given by rows.
std::size_t rational_rank(std::vector<std::vector<BigRational>> rows);

}  // namespace parametra
