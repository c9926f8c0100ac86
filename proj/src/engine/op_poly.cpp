#include "parametra/engine/op_poly.hpp"

#include <algorithm>

namespace parametra {
namespace {

bool term_greater(const OpPoly::Term& a, const OpPoly::Term& b) {
  return compare_degrevlex(a.mono, b.mono) > 0;
}

std::string render_monomial(const Monomial& m, std::span<const std::string> vars) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += i < vars.size() ? vars[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string render_coefficient(const ParamFraction& c, std::span<const std::string> params) {
  if (c.is_rational()) return to_string(c.rational_value());
  if (c.is_polynomial()) return "(" + c.num().to_string(params) + ")";
  return c.to_string(params);
}

OpPoly OpPoly::constant(std::size_t nvars, const ParamFraction& c) {
  OpPoly p(c.arity(), nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

OpPoly OpPoly::variable(std::size_t nparams, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ArityError("OpPoly::variable: index out of range");
  OpPoly p(nparams, nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), ParamFraction::constant(nparams, 1)});
  return p;
}

OpPoly OpPoly::term(Monomial mono, const ParamFraction& c) {
  OpPoly p(c.arity(), mono.arity());
  if (!c.is_zero()) p.terms_.push_back({std::move(mono), c});
  return p;
}

OpPoly OpPoly::from_terms(std::size_t nparams, std::size_t nvars, std::vector<Term> terms) {
  for (const Term& t : terms) {
    require_same_arity(nvars, t.mono.arity(), "OpPoly::from_terms");
    require_same_arity(nparams, t.coeff.arity(), "OpPoly::from_terms");
  }
  std::stable_sort(terms.begin(), terms.end(), term_greater);
  OpPoly p(nparams, nvars);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

ParamFraction OpPoly::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ParamFraction(nparams_);
}

OpPoly OpPoly::operator-() const {
  OpPoly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  require_same_arity(nvars_, o.nvars_, "OpPoly add");
  require_same_arity(nparams_, o.nparams_, "OpPoly add");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size()       ? -1
            : j == o.terms_.size()   ? 1
                                     : compare_degrevlex(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      ParamFraction s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({std::move(terms_[i].mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) { return *this += -o; }

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  require_same_arity(a.nvars_, b.nvars_, "OpPoly mul");
  require_same_arity(a.nparams_, b.nparams_, "OpPoly mul");
  std::vector<OpPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return OpPoly::from_terms(a.nparams_, a.nvars_, std::move(terms));
}

OpPoly operator*(const ParamFraction& c, const OpPoly& a) {
  if (c.is_zero()) return OpPoly(a.nparams_, a.nvars_);
  OpPoly r = a;
  for (auto& t : r.terms_) t.coeff = c * t.coeff;
  return r;
}

bool operator==(const OpPoly& a, const OpPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

OpPoly OpPoly::map_coefficients(std::size_t nparams,
                                const std::function<ParamFraction(const ParamFraction&)>& f) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    ParamFraction c = f(t.coeff);
    require_same_arity(nparams, c.arity(), "OpPoly::map_coefficients");
    if (!c.is_zero()) out.push_back({t.mono, std::move(c)});
  }
  OpPoly r(nparams, nvars_);
  r.terms_ = std::move(out);
  return r;
}

std::string OpPoly::to_string(std::span<const std::string> params, std::span<const std::string> vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    std::string piece;
    std::string mono = render_monomial(t.mono, vars);
    if (t.coeff.is_rational()) {
      BigRational c = t.coeff.rational_value();
      if (mono.empty())
        piece = parametra::to_string(c);
      else if (c == 1)
        piece = mono;
      else if (c == -1)
        piece = "-" + mono;
      else
        piece = parametra::to_string(c) + "*" + mono;
    } else {
      piece = render_coefficient(t.coeff, params);
      if (!mono.empty()) piece += "*" + mono;
    }
    if (!s.empty() && piece.front() != '-') s += '+';
    s += piece;
  }
  return s;
}

}  // namespace parametra
