#pragma once

#include <span>
#include <string>

#include "parametra/arith/param_poly.hpp"

namespace parametra {

// Element of Q(p_1,...,p_t): num/den with gcd(num, den) = 1 and den monic
// under degrevlex. Zero is 0/1.
class ParamFraction {
 public:
  ParamFraction() : num_(0), den_(ParamPoly::constant(0, 1)) {}
  explicit ParamFraction(std::size_t arity) : num_(arity), den_(ParamPoly::constant(arity, 1)) {}
  explicit ParamFraction(ParamPoly num);
  // Throws DomainError when den is zero.
  ParamFraction(ParamPoly num, ParamPoly den);

  static ParamFraction constant(std::size_t arity, const BigRational& c) {
    return ParamFraction(ParamPoly::constant(arity, c));
  }

  std::size_t arity() const { return num_.arity(); }
  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // num and den both constant, i.e. the value lies in Q
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  BigRational rational_value() const { return num_.constant_value() / den_.constant_value(); }
  bool is_polynomial() const { return den_.is_one(); }

  ParamFraction operator-() const;
  friend ParamFraction operator+(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator-(const ParamFraction& a, const ParamFraction& b) { return a + (-b); }
  friend ParamFraction operator*(const ParamFraction& a, const ParamFraction& b);
  // Throws DomainError on division by zero.
  friend ParamFraction operator/(const ParamFraction& a, const ParamFraction& b);
  ParamFraction inverse() const;
  ParamFraction& operator+=(const ParamFraction& o) { return *this = *this + o; }
  ParamFraction& operator-=(const ParamFraction& o) { return *this = *this - o; }
  ParamFraction& operator*=(const ParamFraction& o) { return *this = *this * o; }
  friend bool operator==(const ParamFraction& a, const ParamFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws DomainError when the denominator vanishes at the point.
  BigRational evaluate(std::span<const BigRational> point) const;

  // Singular-style rendering: "num" when den is 1, "(num)/(den)" otherwise.
  std::string to_string(std::span<const std::string> names) const;

 private:
  struct Normalized {};
  ParamFraction(ParamPoly num, ParamPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void make_den_monic();

  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace parametra
