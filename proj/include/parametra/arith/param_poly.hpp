#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parametra/arith/monomial.hpp"

namespace parametra {

using BigInteger = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigRational& q);

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sparse polynomial over Q in a fixed number of parameters. Terms are kept
// sorted descending under degrevlex with no zero coefficients, so equality is
// structural and iteration order is canonical.
class ParamPoly {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;
  };

  ParamPoly() = default;
  explicit ParamPoly(std::size_t arity) : arity_(arity) {}

  static ParamPoly constant(std::size_t arity, const BigRational& c);
  static ParamPoly variable(std::size_t arity, std::size_t index);
  static ParamPoly term(Monomial mono, const BigRational& c);
  // Sorts, merges equal monomials and drops zeros.
  static ParamPoly from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term value for a constant polynomial (zero for the zero polynomial).
  BigRational constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const BigRational& leading_coeff() const { return terms_.front().coeff; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  std::int64_t total_degree() const;
  Exponent degree_in(std::size_t var) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }
  std::vector<std::size_t> variables() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const BigRational& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const BigRational& c) { return a *= c; }
  friend ParamPoly operator*(const BigRational& c, ParamPoly a) { return a *= c; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  // this += c * x^m * o
  void add_scaled(const ParamPoly& o, const BigRational& c, const Monomial& m);
  ParamPoly times_monomial(const Monomial& m) const;

  ParamPoly pow(unsigned e) const;
  BigRational evaluate(std::span<const BigRational> point) const;
  // Replaces variable `var` by `value` (same arity).
  ParamPoly substitute(std::size_t var, const ParamPoly& value) const;
  ParamPoly derivative(std::size_t var) const;

  // Coefficients c_k with this = sum c_k * x_var^k; the c_k do not use x_var.
  std::vector<ParamPoly> coefficients_in(std::size_t var) const;
  static ParamPoly from_coefficients(std::size_t arity, std::size_t var,
                                     const std::vector<ParamPoly>& coeffs);

  // Leading coefficient normalized to 1; zero stays zero.
  ParamPoly monic() const;
  // Integer coefficients with content 1 and positive leading coefficient.
  ParamPoly primitive_integer() const;
  // Positive rational c with this = c * primitive_integer() * sign.
  BigRational rational_content() const;

  // Reinterprets the polynomial over a different variable set: variable i
  // moves to index map[i] of a ring of `arity` variables.
  ParamPoly remap(std::size_t arity, std::span<const std::size_t> map) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

// Total order: total degree, then degrevlex of successive terms, then
// coefficients. Used for canonical sorting of polynomial lists.
int compare_polys(const ParamPoly& a, const ParamPoly& b);

// a / b when b divides a exactly, nullopt otherwise. Throws on b == 0.
std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);

// Monic greatest common divisor. Throws DomainError when both are zero.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
ParamPoly lcm(const ParamPoly& a, const ParamPoly& b);

// Monic gcd of the coefficients of `a` viewed as a polynomial in `var`.
ParamPoly content_in(const ParamPoly& a, std::size_t var);

}  // namespace parametra
