#pragma once

#include <optional>
#include <vector>

#include "parametra/engine/groebner.hpp"

namespace parametra {

// Ideals of Q[p] with the parameters read as polynomial variables.
struct IdealOptions {
  // Defaults to degrevlex on the parameters.
  std::optional<MonoOrder> order;
  // Forwarded to the engine; exceeding it throws ResourceLimit.
  std::size_t max_pairs = 0;
};

OpPoly as_operator(const ParamPoly& p);
// Throws DomainError when a coefficient is not rational.
ParamPoly as_parameter(const OpPoly& p);

// Reduced Groebner basis with integer primitive elements.
std::vector<ParamPoly> ideal_basis(const std::vector<ParamPoly>& gens, std::size_t arity,
                                   const IdealOptions& opts = {});

bool contains_one(const std::vector<ParamPoly>& gens, std::size_t arity, const IdealOptions& opts = {});

// f in the ideal generated by a Groebner basis.
bool ideal_member(const ParamPoly& f, const std::vector<ParamPoly>& basis, const IdealOptions& opts = {});

// 1 in <gens, 1 - y_1 n_1, ..., 1 - y_k n_k>: no common zero of gens with
// all n_k nonzero.
bool no_common_zero(const std::vector<ParamPoly>& gens, const std::vector<ParamPoly>& nonzero,
                    std::size_t arity, const IdealOptions& opts = {});

// f in the radical of <gens>.
bool in_radical(const ParamPoly& f, const std::vector<ParamPoly>& gens, std::size_t arity,
                const IdealOptions& opts = {});

}  // namespace parametra
