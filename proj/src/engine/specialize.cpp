#include "parametra/engine/specialize.hpp"

namespace parametra {

ParamMap rational_point(std::span<const BigRational> point) {
  ParamMap m;
  for (const BigRational& v : point) m.images.push_back(ParamFraction::constant(0, v));
  return m;
}

ParamPoly apply(const ParamMap& map, const ParamPoly& p) {
  ParamFraction f = apply(map, ParamFraction(p));
  if (!f.den().is_constant()) throw DomainError("apply: polynomial image expected");
  return f.num() * (1 / f.den().constant_value());
}

ParamFraction apply(const ParamMap& map, const ParamFraction& c) {
  require_same_arity(map.images.size(), c.arity(), "ParamMap");
  auto image = [&](const ParamPoly& p) {
    ParamFraction acc(map.target_params);
    for (const auto& t : p.terms()) {
      ParamFraction term = ParamFraction::constant(map.target_params, t.coeff);
      for (std::size_t i = 0; i < t.mono.arity(); ++i)
        for (Exponent e = 0; e < t.mono[i]; ++e) term = term * map.images[i];
      acc += term;
    }
    return acc;
  };
  ParamFraction den = image(c.den());
  if (den.is_zero()) throw DomainError("specialization: a denominator vanishes");
  return image(c.num()) / den;
}

OpPoly apply(const ParamMap& map, const OpPoly& p) {
  return p.map_coefficients(map.target_params, [&](const ParamFraction& c) { return apply(map, c); });
}

ModMatrix apply(const ParamMap& map, const ModMatrix& m) {
  ModMatrix out = ModMatrix::zero(map.target_params, m.nvars(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = apply(map, m.at(i, j));
  return out;
}

BigRational evaluate(const OpPoly& p, std::span<const BigRational> params, std::span<const BigRational> vars) {
  BigRational acc = 0;
  for (const auto& t : p.terms()) {
    BigRational v = t.coeff.evaluate(params);
    for (std::size_t i = 0; i < t.mono.arity(); ++i)
      for (Exponent e = 0; e < t.mono[i]; ++e) v *= vars[i];
    acc += v;
  }
  return acc;
}

std::size_t rational_rank(std::vector<std::vector<BigRational>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      BigRational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace parametra
