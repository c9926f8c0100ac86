#include "parametra/arith/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace parametra {

std::string to_string(const BigRational& q) { return q.get_str(); }

namespace {

bool term_greater(const ParamPoly::Term& a, const ParamPoly::Term& b) {
  return compare_degrevlex(a.mono, b.mono) > 0;
}

BigRational rational_pow(const BigRational& base, unsigned e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace

ParamPoly ParamPoly::constant(std::size_t arity, const BigRational& c) {
  ParamPoly p(arity);
  if (c != 0) p.terms_.push_back({Monomial(arity), c});
  return p;
}

ParamPoly ParamPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityError("ParamPoly::variable: index out of range");
  ParamPoly p(arity);
  p.terms_.push_back({Monomial::variable(arity, index), BigRational(1)});
  return p;
}

ParamPoly ParamPoly::term(Monomial mono, const BigRational& c) {
  ParamPoly p(mono.arity());
  if (c != 0) p.terms_.push_back({std::move(mono), c});
  return p;
}

ParamPoly ParamPoly::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const Term& t : terms) require_same_arity(arity, t.mono.arity(), "ParamPoly::from_terms");
  std::sort(terms.begin(), terms.end(), term_greater);
  ParamPoly p(arity);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

BigRational ParamPoly::constant_value() const {
  if (terms_.empty()) return BigRational(0);
  if (!is_constant()) throw DomainError("ParamPoly::constant_value: polynomial is not constant");
  return terms_[0].coeff;
}

std::int64_t ParamPoly::total_degree() const {
  // degrevlex sorts by total degree first
  return terms_.empty() ? -1 : terms_.front().mono.degree();
}

Exponent ParamPoly::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::vector<std::size_t> ParamPoly::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < arity_; ++v)
    if (uses(v)) out.push_back(v);
  return out;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void ParamPoly::add_scaled(const ParamPoly& o, const BigRational& c, const Monomial& m) {
  require_same_arity(arity_, o.arity_, "ParamPoly add");
  if (c == 0 || o.is_zero()) return;
  if (&o == this) {
    ParamPoly copy = o;
    add_scaled(copy, c, m);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = b->mono * m;
    int cmp = a == terms_.end() ? -1 : compare_degrevlex(a->mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({std::move(bm), b->coeff * c});
      ++b;
    } else {
      BigRational s = a->coeff + b->coeff * c;
      if (s != 0) out.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  add_scaled(o, BigRational(1), Monomial(arity_));
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  add_scaled(o, BigRational(-1), Monomial(arity_));
  return *this;
}

ParamPoly& ParamPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly ParamPoly::times_monomial(const Monomial& m) const {
  ParamPoly r = *this;
  for (Term& t : r.terms_) t.mono *= m;
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  require_same_arity(a.arity_, b.arity_, "ParamPoly mul");
  if (a.is_zero() || b.is_zero()) return ParamPoly(a.arity_);
  if (a.terms_.size() == 1) {
    ParamPoly r = b.times_monomial(a.terms_[0].mono);
    return r *= a.terms_[0].coeff;
  }
  if (b.terms_.size() == 1) {
    ParamPoly r = a.times_monomial(b.terms_[0].mono);
    return r *= b.terms_[0].coeff;
  }
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, 0);
      it->second += ta.coeff * tb.coeff;
    }
  std::vector<ParamPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(), term_greater);
  ParamPoly r(a.arity_);
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result = constant(arity_, 1);
  ParamPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

BigRational ParamPoly::evaluate(std::span<const BigRational> point) const {
  if (point.size() != arity_) throw ArityError("ParamPoly::evaluate: point arity mismatch");
  BigRational sum = 0;
  for (const Term& t : terms_) {
    BigRational v = t.coeff;
    for (std::size_t i = 0; i < arity_ && v != 0; ++i)
      if (t.mono[i] != 0) v *= rational_pow(point[i], static_cast<unsigned>(t.mono[i]));
    sum += v;
  }
  return sum;
}

ParamPoly ParamPoly::substitute(std::size_t var, const ParamPoly& value) const {
  require_same_arity(arity_, value.arity_, "ParamPoly::substitute");
  std::vector<ParamPoly> coeffs = coefficients_in(var);
  // Horner in the substituted value
  ParamPoly r(arity_);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    r = r * value;
    r += coeffs[k];
  }
  return r;
}

ParamPoly ParamPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d{t.mono, t.coeff * t.mono[var]};
    d.mono[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(arity_, std::move(out));
}

std::vector<ParamPoly> ParamPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const Term& t : terms_) {
    Term c = t;
    auto k = static_cast<std::size_t>(c.mono[var]);
    c.mono[var] = 0;
    buckets[k].push_back(std::move(c));
  }
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // removing one variable from a degrevlex-sorted list can break the order
    out.push_back(from_terms(arity_, std::move(b)));
  }
  if (is_zero()) out.assign(1, ParamPoly(arity_));
  return out;
}

ParamPoly ParamPoly::from_coefficients(std::size_t arity, std::size_t var,
                                       const std::vector<ParamPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const Term& t : coeffs[k].terms_) {
      Term c = t;
      c.mono[var] += static_cast<Exponent>(k);
      terms.push_back(std::move(c));
    }
  return from_terms(arity, std::move(terms));
}

ParamPoly ParamPoly::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  ParamPoly r = *this;
  BigRational inv = 1 / leading_coeff();
  return r *= inv;
}

BigRational ParamPoly::rational_content() const {
  if (is_zero()) return BigRational(0);
  BigInteger num_gcd = 0;
  BigInteger den_lcm = 1;
  for (const Term& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  BigRational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

ParamPoly ParamPoly::primitive_integer() const {
  if (is_zero()) return *this;
  BigRational c = rational_content();
  if (leading_coeff() < 0) c = -c;
  ParamPoly r = *this;
  return r *= (1 / c);
}

ParamPoly ParamPoly::remap(std::size_t arity, std::span<const std::size_t> map) const {
  if (map.size() != arity_) throw ArityError("ParamPoly::remap: map size mismatch");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(arity);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] >= arity) throw ArityError("ParamPoly::remap: target index out of range");
      m[map[i]] += t.mono[i];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(arity, std::move(terms));
}

std::string ParamPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    bool neg = t.coeff < 0;
    BigRational mag = neg ? BigRational(-t.coeff) : t.coeff;
    if (neg)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    bool one = t.mono.is_one();
    if (one) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    bool first_factor = true;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << (i < names.size() ? names[i] : "p" + std::to_string(i + 1));
      if (t.mono[i] > 1) os << '^' << t.mono[i];
    }
  }
  return os.str();
}

int compare_polys(const ParamPoly& a, const ParamPoly& b) {
  std::int64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_degrevlex(a.terms()[i].mono, b.terms()[i].mono);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.terms()[i].coeff, b.terms()[i].coeff);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b) {
  require_same_arity(a.arity(), b.arity(), "divide_exact");
  if (b.is_zero()) throw DomainError("divide_exact: division by zero polynomial");
  if (a.is_zero()) return ParamPoly(a.arity());
  const std::size_t n = a.arity();
  // quick rejections: degree per variable and total degree
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v)
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;
  if (b.is_constant()) {
    ParamPoly q = a;
    return q *= (1 / b.leading_coeff());
  }
  ParamPoly r = a;
  std::vector<ParamPoly::Term> quotient;
  const Monomial& lb = b.leading_monomial();
  const BigRational inv_lc = 1 / b.leading_coeff();
  while (!r.is_zero()) {
    const auto& lt = r.leading_term();
    if (!lb.divides(lt.mono)) return std::nullopt;
    Monomial qm = lt.mono / lb;
    BigRational qc = lt.coeff * inv_lc;
    r.add_scaled(b, -qc, qm);
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  // quotient terms come out in descending order already
  ParamPoly q = ParamPoly::from_terms(n, std::move(quotient));
  return q;
}

}  // namespace parametra
