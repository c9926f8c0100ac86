#pragma once

#include <optional>

#include "parametra/engine/groebner.hpp"

namespace parametra {

// M = A^{1 x q} / A^{1 x p} R for a relation matrix R in A^{p x q}.
class PresentedModule {
 public:
  explicit PresentedModule(ModMatrix relations) : relations_(std::move(relations)) {}

  const ModMatrix& relations() const { return relations_; }
  std::size_t generators() const { return relations_.cols(); }
  // Rows of R as vectors of A^q.
  ModMatrix relation_vectors() const { return relations_.transpose(); }
  // The transposed module N(M), presented by R^T.
  PresentedModule transposed() const { return PresentedModule(relations_.transpose()); }

 private:
  ModMatrix relations_;
};

ModMatrix transpose(const ModMatrix& m);

// L with L * M = Id, or nullopt when the Groebner basis of the columns of
// M^T is not the identity.
std::optional<ModMatrix> left_inverse(const ModMatrix& M, const ModOrder& order, DenominatorLog* log = nullptr);
// R with M * R = Id, or nullopt.
std::optional<ModMatrix> right_inverse(const ModMatrix& M, const ModOrder& order);

// Columns generate {x : M x = 0}.
ModMatrix right_kernel(const ModMatrix& M, const ModOrder& order);
// Rows generate {y : y M = 0}.
ModMatrix left_kernel(const ModMatrix& M, const ModOrder& order);

// Rank of the span of the columns over the fraction field of A: the number
// of distinct leading components of a position-over-term basis.
std::size_t span_rank(const ModMatrix& gens, const ModOrder& order);

// cols - rank of the syzygy module.
std::size_t column_rank(const ModMatrix& M, const ModOrder& order);

// Rank of M with all parameters and operator variables replaced by the
// given rational values.
std::size_t specialized_rank(const ModMatrix& M, std::span<const BigRational> params,
                             std::span<const BigRational> vars);

// Krull dimension of A^q modulo the leading module of the relations; -1 for
// the zero module.
int system_dimension(const PresentedModule& M, const ModOrder& order);

}  // namespace parametra

namespace parametra {

// Clears denominators, removes the polynomial content over K[p] and makes
// the leading rational coefficient of the leading term positive.
OpPoly canonize(const OpPoly& f);
ModElement canonize(const ModElement& v, const ModOrder& order);
// Every column canonized, zero columns dropped.
ModMatrix canonize_columns(const ModMatrix& m, const ModOrder& order);
// Canonized reduced Groebner basis of the column span.
ModMatrix canonical_basis(const ModMatrix& m, const ModOrder& order);

}  // namespace parametra
