#include "parametra/analysis/strata.hpp"

#include <algorithm>
#include <deque>

#include "parametra/analysis/genericity.hpp"
#include "parametra/arith/factorize.hpp"

namespace parametra {
namespace {

bool is_unit_ideal(const std::vector<ParamPoly>& basis) {
  return std::any_of(basis.begin(), basis.end(), [](const ParamPoly& p) { return p.is_constant(); });
}

bool same_ideal_contained(const std::vector<ParamPoly>& small, const std::vector<ParamPoly>& big, std::size_t arity,
                          const IdealOptions& opts) {
  for (const ParamPoly& p : small)
    if (!in_radical(p, big, arity, opts)) return false;
  return true;
}

}  // namespace

std::string_view status_text(Stratum::Status s) {
  switch (s) {
    case Stratum::Status::Nonempty: return "nonempty";
    case Stratum::Status::Empty: return "empty";
    case Stratum::Status::Unknown: return "unknown";
  }
  return "";
}

std::vector<std::vector<ParamPoly>> fact_gb(const std::vector<ParamPoly>& I, const std::vector<ParamPoly>& J,
                                            std::size_t arity, const IdealOptions& opts) {
  std::vector<std::vector<ParamPoly>> done;
  std::deque<std::vector<ParamPoly>> pending{I};
  while (!pending.empty()) {
    std::vector<ParamPoly> G = ideal_basis(pending.front(), arity, opts);
    pending.pop_front();
    if (is_unit_ideal(G)) continue;
    if (std::any_of(J.begin(), J.end(), [&](const ParamPoly& j) { return in_radical(j, G, arity, opts); })) continue;
    bool split = false;
    for (std::size_t i = 0; i < G.size() && !split; ++i) {
      std::vector<ParamPoly> fs = distinct_factors(G[i]);
      if (fs.size() == 1 && fs[0] == G[i].monic()) continue;
      split = true;
      for (const ParamPoly& f : fs) {
        std::vector<ParamPoly> next = G;
        next[i] = f;
        pending.push_back(std::move(next));
      }
    }
    if (!split) done.push_back(std::move(G));
  }
  std::vector<std::vector<ParamPoly>> out;
  for (std::size_t a = 0; a < done.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < done.size() && !redundant; ++b) {
      if (a == b || !same_ideal_contained(done[b], done[a], arity, opts)) continue;
      bool equal = same_ideal_contained(done[a], done[b], arity, opts);
      redundant = !equal || b < a;
    }
    if (!redundant) out.push_back(done[a]);
  }
  return out;
}

std::vector<Stratum> sign_patterns(const std::vector<ParamPoly>& P) {
  const std::size_t n = P.size();
  if (n >= 63) throw std::invalid_argument("sign_patterns: too many polynomials");
  std::vector<Stratum> out;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < all; ++mask) {
    Stratum s;
    for (std::size_t i = 0; i < n; ++i) {
      bool nonzero = mask >> (n - 1 - i) & 1;
      (nonzero ? s.inequations : s.equations).push_back(P[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Stratum> stratify_lc(std::vector<ParamPoly> P, std::size_t arity, const StratifyOptions& opts) {
  std::stable_sort(P.begin(), P.end(), factor_less);
  P.erase(std::unique(P.begin(), P.end()), P.end());
  std::vector<Stratum> out;
  for (Stratum& s : sign_patterns(P)) {
    try {
      s.equations = ideal_basis(s.equations, arity, opts.ideal);
      bool empty = is_unit_ideal(s.equations) || no_common_zero(s.equations, s.inequations, arity, opts.ideal);
      s.status = empty ? Stratum::Status::Empty : Stratum::Status::Nonempty;
    } catch (const ResourceLimit&) {
      s.status = Stratum::Status::Unknown;
    }
    if (s.status == Stratum::Status::Nonempty && opts.decompose) {
      try {
        s.components = fact_gb(s.equations, s.inequations, arity, opts.ideal);
      } catch (const ResourceLimit&) {
        s.components.clear();
      }
    }
    if (opts.prune && s.status == Stratum::Status::Empty) continue;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace parametra
