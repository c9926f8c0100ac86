#include <algorithm>
#include <optional>

#include "parametra/arith/param_poly.hpp"

namespace parametra {
namespace {

using UPoly = std::vector<ParamPoly>;  // coefficient k multiplies x^k

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Monomial min_exponents(const ParamPoly& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms()) m = gcd(m, t.mono);
  return m;
}

ParamPoly divide_monomial(const ParamPoly& p, const Monomial& m) {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono / m, t.coeff});
  return ParamPoly::from_terms(p.arity(), std::move(terms));
}

ParamPoly must_divide(const ParamPoly& a, const ParamPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *std::move(q);
}

ParamPoly gcd_impl(const ParamPoly& a, const ParamPoly& b);

// Heuristic gcd over Z: evaluate one variable at a large integer, recurse,
// rebuild by xi-adic expansion and accept after trial division.
constexpr std::size_t kHeuristicBits = 6000;

mpz_class max_norm(const ParamPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

mpz_class integer_content(const ParamPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

ParamPoly evaluate_at(const ParamPoly& p, std::size_t var, const mpz_class& xi) {
  std::vector<mpz_class> powers{1};
  std::vector<ParamPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Exponent e = t.mono[var];
    while (powers.size() <= static_cast<std::size_t>(e)) powers.push_back(powers.back() * xi);
    Monomial m = t.mono;
    m[var] = 0;
    terms.push_back({std::move(m), t.coeff * BigRational(powers[e])});
  }
  return ParamPoly::from_terms(p.arity(), std::move(terms));
}

std::optional<ParamPoly> reconstruct(ParamPoly gamma, std::size_t var, const mpz_class& xi, Exponent max_degree) {
  std::vector<ParamPoly::Term> out;
  const mpz_class half = xi / 2;
  for (Exponent i = 0; !gamma.is_zero(); ++i) {
    if (i > max_degree) return std::nullopt;
    std::vector<ParamPoly::Term> digit, rest;
    for (const auto& t : gamma.terms()) {
      mpz_class c = t.coeff.get_num();
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        digit.push_back({t.mono, BigRational(r)});
        Monomial m = t.mono;
        m[var] = i;
        out.push_back({std::move(m), BigRational(r)});
      }
      mpz_class q = (c - r) / xi;
      if (q != 0) rest.push_back({t.mono, BigRational(q)});
    }
    gamma = ParamPoly::from_terms(gamma.arity(), std::move(rest));
  }
  return ParamPoly::from_terms(gamma.arity(), std::move(out));
}

// Full gcd over Z (integer content included) of integer polynomials.
std::optional<ParamPoly> heuristic_gcd(const ParamPoly& a, const ParamPoly& b) {
  const std::size_t n = a.arity();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
  if (a.is_constant() || b.is_constant()) return ParamPoly::constant(n, BigRational(c));
  ParamPoly pa = a.primitive_integer(), pb = b.primitive_integer();
  std::vector<std::size_t> vars = pa.variables();
  for (std::size_t v : pb.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::size_t x = *std::max_element(vars.begin(), vars.end());
  Exponent deg = std::max(pa.degree_in(x), pb.degree_in(x));
  mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > kHeuristicBits) return std::nullopt;
    ParamPoly ea = evaluate_at(pa, x, xi), eb = evaluate_at(pb, x, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      auto gamma = heuristic_gcd(ea, eb);
      if (!gamma) return std::nullopt;
      auto g = reconstruct(*gamma, x, xi, deg);
      if (g && !g->is_zero()) {
        ParamPoly pg = g->primitive_integer();
        if (divide_exact(pa, pg) && divide_exact(pb, pg)) return pg * BigRational(c);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

ParamPoly content_of(const UPoly& u, std::size_t arity) {
  ParamPoly g(arity);
  // smallest coefficients first keeps the intermediate gcds cheap
  std::vector<const ParamPoly*> order;
  for (const auto& c : u)
    if (!c.is_zero()) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const ParamPoly* x, const ParamPoly* y) { return x->size() < y->size(); });
  for (const ParamPoly* c : order) {
    g = g.is_zero() ? c->monic() : gcd_impl(g, *c);
    if (g.is_one()) break;
  }
  return g;
}

void divide_coefficients(UPoly& u, const ParamPoly& c) {
  if (c.is_one()) return;
  for (auto& x : u)
    if (!x.is_zero()) x = must_divide(x, c);
}

// Divides by the positive rational content of all coefficients together.
void strip_rational_content(UPoly& u) {
  mpz_class num = 0, den = 1;
  for (const ParamPoly& c : u)
    for (const auto& t : c.terms()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  if (num == 0 || (num == 1 && den == 1)) return;
  BigRational f(den, num);
  f.canonicalize();
  for (ParamPoly& c : u) c = c * f;
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const ParamPoly& lcb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    ParamPoly lca = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lcb;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= lca * b[k];
    trim(a);
  }
  return a;
}

ParamPoly gcd_same_support(const ParamPoly& a, const ParamPoly& b,
                           const std::vector<std::size_t>& vars) {
  const std::size_t n = a.arity();
  std::size_t x = vars.front();
  Exponent best = std::max(a.degree_in(x), b.degree_in(x));
  for (std::size_t v : vars) {
    Exponent d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      x = v;
    }
  }
  if (auto h = heuristic_gcd(a.primitive_integer(), b.primitive_integer())) return h->monic();
  UPoly ua = a.coefficients_in(x);
  UPoly ub = b.coefficients_in(x);
  trim(ua);
  trim(ub);
  ParamPoly ca = content_of(ua, n);
  ParamPoly cb = content_of(ub, n);
  ParamPoly c = gcd_impl(ca, cb);
  divide_coefficients(ua, ca);
  divide_coefficients(ub, cb);
  strip_rational_content(ua);
  strip_rational_content(ub);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  UPoly g;
  while (true) {
    UPoly r = pseudo_remainder(ua, ub);
    if (r.empty()) {
      g = std::move(ub);
      break;
    }
    if (r.size() == 1) {
      g = UPoly{ParamPoly::constant(n, 1)};
      break;
    }
    divide_coefficients(r, content_of(r, n));
    strip_rational_content(r);
    ua = std::move(ub);
    ub = std::move(r);
  }
  divide_coefficients(g, content_of(g, n));
  return (c * ParamPoly::from_coefficients(n, x, g)).monic();
}

ParamPoly gcd_impl(const ParamPoly& a, const ParamPoly& b) {
  const std::size_t n = a.arity();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly::constant(n, 1);
  if (a.monic() == b.monic()) return a.monic();
  if (a.is_monomial() || b.is_monomial()) {
    return ParamPoly::term(gcd(min_exponents(a), min_exponents(b)), 1);
  }
  Monomial ma = min_exponents(a), mb = min_exponents(b);
  Monomial common = gcd(ma, mb);
  ParamPoly ra = ma.is_one() ? a : divide_monomial(a, ma);
  ParamPoly rb = mb.is_one() ? b : divide_monomial(b, mb);
  ParamPoly mono = ParamPoly::term(common, 1);
  if (ra.is_constant() || rb.is_constant()) return mono;

  const ParamPoly& small = ra.size() <= rb.size() ? ra : rb;
  const ParamPoly& large = ra.size() <= rb.size() ? rb : ra;
  if (divide_exact(large, small)) return mono * small.monic();

  std::vector<std::size_t> va = ra.variables(), vb = rb.variables();
  for (std::size_t v : va)
    if (!rb.uses(v)) return mono * gcd_impl(content_in(ra, v), rb);
  for (std::size_t v : vb)
    if (!ra.uses(v)) return mono * gcd_impl(ra, content_in(rb, v));
  return mono * gcd_same_support(ra, rb, va);
}

}  // namespace

ParamPoly content_in(const ParamPoly& a, std::size_t var) {
  UPoly u = a.coefficients_in(var);
  trim(u);
  return content_of(u, a.arity());
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  require_same_arity(a.arity(), b.arity(), "gcd");
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd: both arguments are zero");
  return gcd_impl(a, b);
}

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly(a.arity());
  ParamPoly g = gcd(a, b);
  return (must_divide(a, g) * b).monic();
}

}  // namespace parametra
