#include "parametra/arith/factorize.hpp"

#include <algorithm>
#include <random>

namespace parametra {
namespace {

constexpr std::size_t kMaxLinearCandidates = 20000;
constexpr unsigned long kMaxIntegerDivisorSearch = 10000;

ParamPoly exact(const ParamPoly& a, const ParamPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("factorize: expected exact division");
  return *std::move(q);
}

// Recursively pulls out contents with respect to each variable.
void split_contents(const ParamPoly& p, unsigned mult, std::vector<Factor>& out) {
  if (p.is_constant()) return;
  for (std::size_t v : p.variables()) {
    ParamPoly c = content_in(p, v);
    if (!c.is_constant()) {
      split_contents(c, mult, out);
      split_contents(exact(p, c), mult, out);
      return;
    }
  }
  out.push_back({p.monic(), mult});
}

std::vector<Factor> yun(const ParamPoly& f, std::size_t x) {
  std::vector<Factor> out;
  ParamPoly fp = f.derivative(x);
  ParamPoly a0 = gcd(f, fp);
  ParamPoly b = exact(f, a0);
  ParamPoly c = exact(fp, a0);
  ParamPoly d = c - b.derivative(x);
  unsigned i = 1;
  while (!b.is_constant()) {
    ParamPoly a = d.is_zero() ? b.monic() : gcd(b, d);
    if (!a.is_constant()) out.push_back({a.monic(), i});
    b = exact(b, a);
    c = exact(d, a);
    d = c - b.derivative(x);
    ++i;
  }
  return out;
}

std::vector<BigInteger> small_divisors(const BigInteger& n) {
  BigInteger m = abs(n);
  std::vector<BigInteger> out{1};
  if (m <= 1 || m > kMaxIntegerDivisorSearch) return out;
  unsigned long v = m.get_ui();
  for (unsigned long k = 2; k <= v; ++k)
    if (v % k == 0) out.emplace_back(k);
  return out;
}

BigInteger integer_content(const ParamPoly& p) {
  BigInteger g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

std::vector<Factor> factor_pieces(const ParamPoly& a, bool linear_search);

// All monic polynomial divisors of p built from its squarefree factors.
std::vector<ParamPoly> polynomial_divisors(const ParamPoly& p, std::size_t cap) {
  std::vector<ParamPoly> divs{ParamPoly::constant(p.arity(), 1)};
  for (const Factor& f : factor_pieces(p, false)) {
    std::vector<ParamPoly> next;
    for (const ParamPoly& d : divs) {
      ParamPoly acc = d;
      next.push_back(acc);
      for (unsigned e = 1; e <= f.multiplicity; ++e) {
        acc = acc * f.poly;
        next.push_back(acc);
        if (next.size() > cap) return next;
      }
    }
    divs = std::move(next);
  }
  return divs;
}

// Finds a factor of f of degree exactly one in x; f is squarefree and
// primitive in every variable it uses.
std::optional<ParamPoly> linear_factor(const ParamPoly& f, std::size_t x) {
  const std::size_t n = f.arity();
  ParamPoly fi = f.primitive_integer();
  std::vector<ParamPoly> coeffs = fi.coefficients_in(x);
  const ParamPoly& lc = coeffs.back();
  const ParamPoly& tc = coeffs.front();
  if (tc.is_zero()) return std::nullopt;

  // evaluation filter: all variables except x at a fixed pseudo-random point
  std::mt19937_64 rng(0x5eed ^ (x * 7919));
  std::vector<BigRational> point(n);
  for (auto& v : point) v = BigRational(static_cast<long>(rng() % 97) + 3);
  std::vector<BigRational> ucoeffs;
  for (const auto& c : coeffs) ucoeffs.push_back(c.evaluate(point));
  auto root_ok = [&](const BigRational& r) {
    BigRational acc = 0;
    for (std::size_t k = ucoeffs.size(); k-- > 0;) acc = acc * r + ucoeffs[k];
    return acc == 0;
  };

  std::vector<ParamPoly> adivs = polynomial_divisors(lc, 512);
  std::vector<ParamPoly> bdivs = polynomial_divisors(tc, 512);
  std::vector<BigInteger> aints = small_divisors(integer_content(lc));
  std::vector<BigInteger> bints = small_divisors(integer_content(tc));
  std::vector<BigRational> avals, bvals;
  for (const auto& d : adivs) avals.push_back(d.evaluate(point));
  for (const auto& d : bdivs) bvals.push_back(d.evaluate(point));

  std::size_t tried = 0;
  for (std::size_t ia = 0; ia < adivs.size(); ++ia) {
    if (avals[ia] == 0) continue;
    for (const auto& ai : aints)
      for (std::size_t ib = 0; ib < bdivs.size(); ++ib)
        for (const auto& bi : bints)
          for (int sign : {1, -1}) {
            if (++tried > kMaxLinearCandidates) return std::nullopt;
            BigRational aval = avals[ia] * BigRational(ai);
            BigRational bval = bvals[ib] * BigRational(bi) * sign;
            if (!root_ok(-bval / aval)) continue;
            ParamPoly cand = (adivs[ia] * BigRational(ai)).times_monomial(Monomial::variable(n, x)) +
                             bdivs[ib] * BigRational(bi * sign);
            if (auto q = divide_exact(fi, cand); q && !q->is_constant()) return cand.monic();
          }
  }
  return std::nullopt;
}

void linear_split(const ParamPoly& p, unsigned mult, std::vector<Factor>& out) {
  for (std::size_t v : p.variables()) {
    if (p.degree_in(v) < 2) continue;
    if (auto lf = linear_factor(p, v)) {
      out.push_back({*lf, mult});
      std::vector<Factor> rest;
      split_contents(exact(p, *lf), mult, rest);
      for (const Factor& r : rest) linear_split(r.poly, r.multiplicity, out);
      return;
    }
  }
  out.push_back({p.monic(), mult});
}

std::vector<Factor> factor_pieces(const ParamPoly& a, bool linear_search) {
  const std::size_t n = a.arity();
  std::vector<Factor> out;
  if (a.is_constant()) return out;
  Monomial m = a.terms().front().mono;
  for (const auto& t : a.terms()) m = gcd(m, t.mono);
  ParamPoly rest = a;
  if (!m.is_one()) {
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 0) out.push_back({ParamPoly::variable(n, v), static_cast<unsigned>(m[v])});
    std::vector<ParamPoly::Term> terms;
    for (const auto& t : a.terms()) terms.push_back({t.mono / m, t.coeff});
    rest = ParamPoly::from_terms(n, std::move(terms));
  }
  std::vector<Factor> pieces;
  split_contents(rest, 1, pieces);
  for (const Factor& piece : pieces) {
    std::vector<Factor> sq = yun(piece.poly, piece.poly.variables().front());
    for (const Factor& s : sq) {
      std::vector<Factor> refined;
      split_contents(s.poly, s.multiplicity, refined);
      for (const Factor& r : refined) {
        if (linear_search)
          linear_split(r.poly, r.multiplicity, out);
        else
          out.push_back(r);
      }
    }
  }
  // merge duplicates defensively; pieces are coprime by construction
  std::sort(out.begin(), out.end(),
            [](const Factor& x, const Factor& y) { return compare_polys(x.poly, y.poly) < 0; });
  std::vector<Factor> merged;
  for (Factor& f : out) {
    if (!merged.empty() && merged.back().poly == f.poly)
      merged.back().multiplicity += f.multiplicity;
    else
      merged.push_back(std::move(f));
  }
  return merged;
}

}  // namespace

Factorization squarefree_factors(const ParamPoly& a) {
  if (a.is_zero()) throw DomainError("squarefree_factors: zero polynomial");
  Factorization out;
  out.factors = factor_pieces(a, true);
  // factors are monic, so the leading coefficient of a is the content
  out.content = a.leading_coeff();
  return out;
}

std::vector<ParamPoly> distinct_factors(const ParamPoly& a) {
  std::vector<ParamPoly> out;
  for (Factor& f : squarefree_factors(a).factors) out.push_back(std::move(f.poly));
  return out;
}

ParamPoly squarefree_part(const ParamPoly& a) {
  ParamPoly r = ParamPoly::constant(a.arity(), 1);
  for (const ParamPoly& f : distinct_factors(a)) r = r * f;
  return r;
}

}  // namespace parametra
