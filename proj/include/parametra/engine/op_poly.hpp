#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "parametra/arith/param_fraction.hpp"

namespace parametra {

// Element of A = K(p)[d_1,...,d_n]. Terms are sorted descending under
// degrevlex on the operator variables; coefficients are nonzero.
class OpPoly {
 public:
  struct Term {
    Monomial mono;
    ParamFraction coeff;
  };

  OpPoly() = default;
  OpPoly(std::size_t nparams, std::size_t nvars) : nparams_(nparams), nvars_(nvars) {}

  static OpPoly constant(std::size_t nvars, const ParamFraction& c);
  static OpPoly variable(std::size_t nparams, std::size_t nvars, std::size_t index);
  static OpPoly term(Monomial mono, const ParamFraction& c);
  static OpPoly from_terms(std::size_t nparams, std::size_t nvars, std::vector<Term> terms);

  std::size_t nparams() const { return nparams_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }
  std::int64_t degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  // Coefficient of the constant monomial (zero when absent).
  ParamFraction constant_coeff() const;

  OpPoly operator-() const;
  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
  friend OpPoly operator*(const ParamFraction& c, const OpPoly& a);
  friend bool operator==(const OpPoly& a, const OpPoly& b);

  // Applies f to every coefficient and drops zeros; the result has
  // `nparams` parameters.
  OpPoly map_coefficients(std::size_t nparams,
                          const std::function<ParamFraction(const ParamFraction&)>& f) const;

  // Singular-style rendering, e.g. "(-g*l2)*d^2+(-g^2)".
  std::string to_string(std::span<const std::string> params, std::span<const std::string> vars) const;

 private:
  std::size_t nparams_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

std::string render_coefficient(const ParamFraction& c, std::span<const std::string> params);

}  // namespace parametra
