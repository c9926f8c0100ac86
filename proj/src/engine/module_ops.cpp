#include "parametra/engine/module_ops.hpp"

#include <algorithm>
#include <bit>

#include "parametra/engine/specialize.hpp"

namespace parametra {
namespace {

bool is_identity_basis(const ModMatrix& G, std::size_t n) {
  if (G.cols() != n || G.rows() != n) return false;
  std::vector<bool> seen(n, false);
  for (const ModElement& c : G.columns()) {
    std::size_t hit = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i].is_zero()) continue;
      if (hit != n || !c[i].is_one()) return false;
      hit = i;
    }
    if (hit == n || seen[hit]) return false;
    seen[hit] = true;
  }
  return true;
}

// Largest set of variables on which no monomial of `leads` is supported.
int independent_dimension(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (const Monomial& m : leads)
    if (m.is_one()) return -1;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (const Monomial& m : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < nvars && inside; ++v)
        if (m[v] > 0 && !(mask >> v & 1)) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace

ModMatrix transpose(const ModMatrix& m) { return m.transpose(); }

std::optional<ModMatrix> left_inverse(const ModMatrix& M, const ModOrder& order, DenominatorLog* log) {
  const std::size_t n = M.cols();
  ModMatrix N = M.transpose();
  ModMatrix G = groebner_basis(N, order);
  if (!is_identity_basis(G, n)) return std::nullopt;
  GroebnerOptions opts;
  opts.log = log;
  ModMatrix K = lift(N, ModMatrix::identity(M.nparams(), M.nvars(), n), order, opts);
  ModMatrix L = K.transpose();
  if (!(L * M == ModMatrix::identity(M.nparams(), M.nvars(), n)))
    throw std::logic_error("left_inverse: verification failed");
  return L;
}

std::optional<ModMatrix> right_inverse(const ModMatrix& M, const ModOrder& order) {
  auto L = left_inverse(M.transpose(), order);
  if (!L) return std::nullopt;
  return L->transpose();
}

ModMatrix right_kernel(const ModMatrix& M, const ModOrder& order) { return syzygies(M, order); }

ModMatrix left_kernel(const ModMatrix& M, const ModOrder& order) {
  return right_kernel(M.transpose(), order).transpose();
}

std::size_t span_rank(const ModMatrix& gens, const ModOrder& order) {
  ModMatrix G = groebner_basis(gens, order.with_scheme(ModScheme::PositionOverTerm));
  std::vector<std::size_t> comps;
  for (const ModElement& g : G.columns())
    comps.push_back(leading_term(g, order.with_scheme(ModScheme::PositionOverTerm))->component);
  std::sort(comps.begin(), comps.end());
  return static_cast<std::size_t>(std::unique(comps.begin(), comps.end()) - comps.begin());
}

std::size_t column_rank(const ModMatrix& M, const ModOrder& order) {
  if (M.cols() == 0) return 0;
  return M.cols() - span_rank(right_kernel(M, order), order);
}

std::size_t specialized_rank(const ModMatrix& M, std::span<const BigRational> params,
                             std::span<const BigRational> vars) {
  std::vector<std::vector<BigRational>> rows(M.rows(), std::vector<BigRational>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) rows[i][j] = evaluate(M.at(i, j), params, vars);
  return rational_rank(std::move(rows));
}

int system_dimension(const PresentedModule& M, const ModOrder& order) {
  const std::size_t q = M.generators();
  const std::size_t n = M.relations().nvars();
  if (n > 20) throw std::invalid_argument("system_dimension: too many operator variables");
  ModMatrix G = groebner_basis(M.relation_vectors(), order);
  std::vector<std::vector<Monomial>> leads(q);
  for (const ModElement& g : G.columns()) {
    auto lt = leading_term(g, order);
    leads[lt->component].push_back(lt->mono);
  }
  int dim = -1;
  for (std::size_t i = 0; i < q; ++i) dim = std::max(dim, independent_dimension(leads[i], n));
  return dim;
}

}  // namespace parametra

namespace parametra {
namespace {

ModElement clear_content(const ModElement& v) {
  std::optional<ParamPoly> den, content;
  for (const OpPoly& e : v.entries())
    for (const auto& t : e.terms()) den = den ? lcm(*den, t.coeff.den()) : t.coeff.den();
  if (!den) return v;
  for (const OpPoly& e : v.entries())
    for (const auto& t : e.terms()) {
      ParamPoly n = *divide_exact(t.coeff.num() * *den, t.coeff.den());
      content = content ? gcd(*content, n) : n.monic();
    }
  ParamFraction scale = ParamFraction(*den) / ParamFraction(*content);
  ModElement out = v;
  for (std::size_t i = 0; i < v.rank(); ++i)
    out[i] = OpPoly::constant(v.nvars(), scale) * v[i];
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const OpPoly& e : out.entries())
    for (const auto& t : e.terms())
      for (const auto& c : t.coeff.num().terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.coeff.get_den_mpz_t());
      }
  BigRational factor(den_lcm, num_gcd);
  factor.canonicalize();
  ParamFraction r = ParamFraction::constant(v.nparams(), factor);
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = OpPoly::constant(v.nvars(), r) * out[i];
  return out;
}

BigRational leading_sign_coeff(const ParamFraction& c) { return c.num().leading_coeff(); }

}  // namespace

OpPoly canonize(const OpPoly& f) {
  if (f.is_zero()) return f;
  OpPoly g = clear_content(ModElement({f}))[0];
  if (leading_sign_coeff(g.terms().front().coeff) < 0) g = -g;
  return g;
}

ModElement canonize(const ModElement& v, const ModOrder& order) {
  auto lt = leading_term(v, order);
  if (!lt) return v;
  ModElement g = clear_content(v);
  lt = leading_term(g, order);
  if (leading_sign_coeff(lt->coeff) < 0) {
    for (std::size_t i = 0; i < g.rank(); ++i) g[i] = -g[i];
  }
  return g;
}

ModMatrix canonize_columns(const ModMatrix& m, const ModOrder& order) {
  ModMatrix out(m.nparams(), m.nvars(), m.rows());
  for (const ModElement& c : m.columns())
    if (!c.is_zero()) out.push_back(canonize(c, order));
  return out;
}

ModMatrix canonical_basis(const ModMatrix& m, const ModOrder& order) {
  return canonize_columns(groebner_basis(m, order), order);
}

}  // namespace parametra
