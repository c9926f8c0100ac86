#include "parametra/engine/groebner.hpp"

#include <algorithm>

namespace parametra {
namespace {

struct MTerm {
  Monomial mono;
  std::size_t comp;
  ParamFraction coeff;
};
using Vec = std::vector<MTerm>;

class Ctx {
 public:
  Ctx(const ModOrder& order, std::size_t nparams, std::size_t nvars)
      : order_(order), nparams_(nparams), nvars_(nvars) {}

  const ModOrder& order() const { return order_; }
  std::size_t nparams() const { return nparams_; }
  std::size_t nvars() const { return nvars_; }

  std::strong_ordering cmp(const MTerm& a, const MTerm& b) const {
    return order_.compare(a.mono, a.comp, b.mono, b.comp);
  }

  void sort(Vec& v) const {
    std::sort(v.begin(), v.end(), [this](const MTerm& a, const MTerm& b) { return cmp(a, b) > 0; });
  }

  Vec from_element(const ModElement& e, std::size_t offset = 0) const {
    Vec v;
    for (std::size_t i = 0; i < e.rank(); ++i)
      for (const auto& t : e[i].terms()) v.push_back({t.mono, i + offset, t.coeff});
    sort(v);
    return v;
  }

  // Components [offset, offset + rank) of v as an element of A^rank.
  ModElement to_element(const Vec& v, std::size_t rank, std::size_t offset = 0) const {
    std::vector<std::vector<OpPoly::Term>> parts(rank);
    for (const MTerm& t : v)
      if (t.comp >= offset && t.comp < offset + rank) parts[t.comp - offset].push_back({t.mono, t.coeff});
    ModElement e(nparams_, nvars_, rank);
    for (std::size_t i = 0; i < rank; ++i) e[i] = OpPoly::from_terms(nparams_, nvars_, std::move(parts[i]));
    return e;
  }

  // f[pos] is cancelled by c * m * g[0]; returns f - c * m * g.
  Vec cancel(Vec& f, std::size_t pos, const ParamFraction& c, const Monomial& m, const Vec& g) const {
    Vec out;
    out.reserve(f.size() + g.size());
    for (std::size_t k = 0; k < pos; ++k) out.push_back(std::move(f[k]));
    std::size_t i = pos + 1, j = 1;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(std::move(f[i++]));
        continue;
      }
      MTerm gt{g[j].mono * m, g[j].comp, ParamFraction()};
      if (i < f.size()) {
        auto c2 = cmp(f[i], gt);
        if (c2 > 0) {
          out.push_back(std::move(f[i++]));
          continue;
        }
        if (c2 == 0) {
          ParamFraction s = f[i].coeff - c * g[j].coeff;
          if (!s.is_zero()) out.push_back({std::move(f[i].mono), f[i].comp, std::move(s)});
          ++i;
          ++j;
          continue;
        }
      }
      gt.coeff = -(c * g[j].coeff);
      out.push_back(std::move(gt));
      ++j;
    }
    return out;
  }

  // Reduces f by the vectors in basis. With full == false only the leading
  // term is reduced.
  Vec reduce(Vec f, const std::vector<const Vec*>& basis, bool full) const {
    std::size_t pos = 0;
    while (pos < f.size()) {
      const MTerm& t = f[pos];
      const Vec* div = nullptr;
      for (const Vec* g : basis) {
        const MTerm& lt = g->front();
        if (lt.comp == t.comp && lt.mono.divides(t.mono)) {
          div = g;
          break;
        }
      }
      if (!div) {
        if (!full) break;
        ++pos;
        continue;
      }
      const MTerm& lt = div->front();
      ParamFraction c = lt.coeff.is_one() ? t.coeff : t.coeff / lt.coeff;
      Monomial m = t.mono / lt.mono;
      f = cancel(f, pos, c, m, *div);
    }
    return f;
  }

  Vec spoly(const Vec& a, const Vec& b) const {
    Monomial l = lcm(a.front().mono, b.front().mono);
    Vec f;
    Monomial ma = l / a.front().mono;
    for (const MTerm& t : a) f.push_back({t.mono * ma, t.comp, t.coeff / a.front().coeff});
    Monomial mb = l / b.front().mono;
    return cancel(f, 0, ParamFraction::constant(nparams_, 1) / b.front().coeff * f.front().coeff, mb, b);
  }

 private:
  const ModOrder& order_;
  std::size_t nparams_;
  std::size_t nvars_;
};

std::vector<const Vec*> pointers(const std::vector<Vec>& v) {
  std::vector<const Vec*> p;
  for (const Vec& x : v)
    if (!x.empty()) p.push_back(&x);
  return p;
}

class Buchberger {
 public:
  Buchberger(const Ctx& ctx, const GroebnerOptions& opts, bool product_criterion)
      : ctx_(ctx), opts_(opts), product_(product_criterion) {}

  void add_input(Vec f) {
    f = ctx_.reduce(std::move(f), pointers(basis_), true);
    if (!f.empty()) insert(std::move(f));
  }

  void run() {
    while (!pending_.empty()) {
      auto best = std::min_element(pending_.begin(), pending_.end(), [](const Pair& x, const Pair& y) {
        return x.degree != y.degree ? x.degree < y.degree : x.seq < y.seq;
      });
      Pair p = *best;
      pending_.erase(best);
      status(p.i, p.j) = kDone;
      if (chain(p)) continue;
      if (opts_.max_pairs && ++reduced_ > opts_.max_pairs)
        throw ResourceLimit("groebner: S-pair limit exceeded");
      Vec s = ctx_.reduce(ctx_.spoly(basis_[p.i], basis_[p.j]), pointers(basis_), true);
      if (!s.empty()) insert(std::move(s));
    }
  }

  // Reduced minimal basis sorted ascending by leading term.
  std::vector<Vec> finalize() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const MTerm& li = basis_[i].front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const MTerm& lj = basis_[j].front();
        if (lj.comp == li.comp && lj.mono.divides(li.mono) && (!(lj.mono == li.mono) || j < i)) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Vec> out;
    for (std::size_t i : keep) {
      std::vector<const Vec*> others;
      for (std::size_t j : keep)
        if (j != i) others.push_back(&basis_[j]);
      Vec tail(basis_[i].begin() + 1, basis_[i].end());
      tail = ctx_.reduce(std::move(tail), others, true);
      Vec g{basis_[i].front()};
      for (MTerm& t : tail) g.push_back(std::move(t));
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [this](const Vec& a, const Vec& b) { return ctx_.cmp(a.front(), b.front()) < 0; });
    return out;
  }

 private:
  static constexpr char kNone = 0, kPending = 1, kDone = 2;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t degree;
    std::size_t seq;
  };

  char& status(std::size_t i, std::size_t j) { return i < j ? status_[j][i] : status_[i][j]; }

  void insert(Vec h) {
    const ParamFraction lc = h.front().coeff;
    if (!lc.is_one()) {
      if (opts_.log && !lc.num().is_constant())
        opts_.log->record({lc.num(), DenominatorEvent::Kind::MonicNormalization, 0, 0, h.front().comp});
      ParamFraction inv = lc.inverse();
      for (MTerm& t : h) t.coeff = t.coeff * inv;
    }
    std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    status_.emplace_back(k, kNone);
    const MTerm& lk = basis_[k].front();
    for (std::size_t i = 0; i < k; ++i) {
      const MTerm& li = basis_[i].front();
      bool skip = li.comp != lk.comp;
      if (!skip && opts_.skip_tag_pairs && ctx_.order().has_tags() && lk.comp >= ctx_.order().tag_start())
        skip = true;
      if (!skip && product_ && li.mono.coprime_with(lk.mono)) skip = true;
      if (skip) {
        status_[k][i] = kDone;
        continue;
      }
      Monomial l = lcm(li.mono, lk.mono);
      std::int64_t deg = l.degree();
      pending_.push_back({i, k, std::move(l), deg, seq_++});
      status_[k][i] = kPending;
    }
  }

  bool chain(const Pair& p) {
    const std::size_t comp = basis_[p.i].front().comp;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const MTerm& lk = basis_[k].front();
      if (lk.comp != comp || !lk.mono.divides(p.lcm)) continue;
      if (status(p.i, k) != kPending && status(p.j, k) != kPending) return true;
    }
    return false;
  }

  const Ctx& ctx_;
  GroebnerOptions opts_;
  bool product_;
  std::vector<Vec> basis_;
  std::vector<std::vector<char>> status_;
  std::vector<Pair> pending_;
  std::size_t seq_ = 0;
  std::size_t reduced_ = 0;
};

std::vector<Vec> lifted_basis(const Ctx& ctx, const ModMatrix& F, const GroebnerOptions& opts) {
  const std::size_t m = F.rows();
  Buchberger bb(ctx, opts, false);
  for (std::size_t k = 0; k < F.cols(); ++k) {
    Vec v = ctx.from_element(F.column(k));
    v.push_back({Monomial(F.nvars()), m + k, ParamFraction::constant(F.nparams(), 1)});
    bb.add_input(std::move(v));
  }
  bb.run();
  return bb.finalize();
}

ModMatrix to_matrix(const Ctx& ctx, const std::vector<Vec>& vs, std::size_t rank) {
  ModMatrix out(ctx.nparams(), ctx.nvars(), rank);
  for (const Vec& v : vs) out.push_back(ctx.to_element(v, rank));
  return out;
}

}  // namespace

std::optional<LeadTerm> leading_term(const ModElement& v, const ModOrder& order) {
  Ctx ctx(order, v.nparams(), v.nvars());
  Vec x = ctx.from_element(v);
  if (x.empty()) return std::nullopt;
  return LeadTerm{x.front().mono, x.front().comp, x.front().coeff};
}

ModElement normal_form(const ModElement& f, const ModMatrix& G, const ModOrder& order) {
  if (G.cols() && G.rows() != f.rank()) throw ShapeError("normal_form: rank mismatch");
  Ctx ctx(order, f.nparams(), f.nvars());
  std::vector<Vec> basis;
  for (const ModElement& g : G.columns()) basis.push_back(ctx.from_element(g));
  return ctx.to_element(ctx.reduce(ctx.from_element(f), pointers(basis), true), f.rank());
}

ModMatrix groebner_basis(const ModMatrix& F, const ModOrder& order, const GroebnerOptions& opts) {
  Ctx ctx(order, F.nparams(), F.nvars());
  Buchberger bb(ctx, opts, F.rows() == 1 && !order.has_tags());
  for (const ModElement& c : F.columns()) bb.add_input(ctx.from_element(c));
  bb.run();
  return to_matrix(ctx, bb.finalize(), F.rows());
}

bool is_groebner_basis(const ModMatrix& G, const ModOrder& order) {
  Ctx ctx(order, G.nparams(), G.nvars());
  std::vector<Vec> basis;
  for (const ModElement& g : G.columns()) {
    Vec v = ctx.from_element(g);
    if (!v.empty()) basis.push_back(std::move(v));
  }
  auto ptrs = pointers(basis);
  const std::size_t n = basis.size();
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (basis[i].front().comp == basis[j].front().comp)
        pairs.push_back({i, j, lcm(basis[i].front().mono, basis[j].front().mono)});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.lcm.degree() < b.lcm.degree(); });
  // Chain criterion over pairs already verified.
  std::vector<char> done(n * n, 0);
  for (const Pair& p : pairs) {
    bool chained = false;
    for (std::size_t k = 0; k < n && !chained; ++k)
      chained = k != p.i && k != p.j && done[p.i * n + k] && done[p.j * n + k] &&
                basis[k].front().comp == basis[p.i].front().comp && basis[k].front().mono.divides(p.lcm);
    if (!chained && !ctx.reduce(ctx.spoly(basis[p.i], basis[p.j]), ptrs, false).empty()) return false;
    done[p.i * n + p.j] = done[p.j * n + p.i] = 1;
  }
  return true;
}

bool in_span(const ModMatrix& G, const ModElement& v, const ModOrder& order) {
  return normal_form(v, G, order).is_zero();
}

Trinity trinity(const ModMatrix& F, const ModOrder& order, const GroebnerOptions& opts) {
  const std::size_t m = F.rows(), l = F.cols();
  ModOrder lo = order.with_tags(m);
  Ctx ctx(lo, F.nparams(), F.nvars());
  std::vector<Vec> basis = lifted_basis(ctx, F, opts);
  Trinity out{ModMatrix(F.nparams(), F.nvars(), m), ModMatrix(F.nparams(), F.nvars(), l),
              ModMatrix(F.nparams(), F.nvars(), l)};
  for (const Vec& v : basis) {
    if (v.front().comp >= m) {
      out.syzygies.push_back(ctx.to_element(v, l, m));
    } else {
      out.gb.push_back(ctx.to_element(v, m));
      out.transform.push_back(ctx.to_element(v, l, m));
    }
  }
  return out;
}

ModMatrix lift(const ModMatrix& F, const ModMatrix& H, const ModOrder& order, const GroebnerOptions& opts) {
  if (H.rows() != F.rows()) throw ShapeError("lift: row mismatch");
  const std::size_t m = F.rows(), l = F.cols();
  ModOrder lo = order.with_tags(m);
  Ctx ctx(lo, F.nparams(), F.nvars());
  GroebnerOptions all = opts;
  all.skip_tag_pairs = false;
  std::vector<Vec> basis = lifted_basis(ctx, F, all);
  auto ptrs = pointers(basis);
  ModMatrix T(F.nparams(), F.nvars(), l);
  for (std::size_t j = 0; j < H.cols(); ++j) {
    Vec r = ctx.reduce(ctx.from_element(H.column(j)), ptrs, true);
    for (const MTerm& t : r)
      if (t.comp < m) throw MembershipError("lift: column " + std::to_string(j + 1) + " is not in the span");
    for (MTerm& t : r) t.coeff = -t.coeff;
    T.push_back(ctx.to_element(r, l, m));
  }
  return T;
}

ModMatrix syzygies(const ModMatrix& F, const ModOrder& order, const GroebnerOptions& opts) {
  GroebnerOptions all = opts;
  all.skip_tag_pairs = false;
  return trinity(F, order, all).syzygies;
}

}  // namespace parametra
