#include "parametra/arith/param_fraction.hpp"

namespace parametra {
namespace {

ParamPoly exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("ParamFraction: inexact division during normalization");
  return *std::move(q);
}

}  // namespace

ParamFraction::ParamFraction(ParamPoly num)
    : num_(std::move(num)), den_(ParamPoly::constant(num_.arity(), 1)) {}

ParamFraction::ParamFraction(ParamPoly num, ParamPoly den) {
  require_same_arity(num.arity(), den.arity(), "ParamFraction");
  if (den.is_zero()) throw DomainError("ParamFraction: zero denominator");
  if (num.is_zero()) {
    num_ = ParamPoly(num.arity());
    den_ = ParamPoly::constant(num.arity(), 1);
    return;
  }
  if (!den.is_constant()) {
    ParamPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  make_den_monic();
}

void ParamFraction::make_den_monic() {
  if (num_.is_zero()) {
    den_ = ParamPoly::constant(num_.arity(), 1);
    return;
  }
  const BigRational& lc = den_.leading_coeff();
  if (lc == 1) return;
  BigRational inv = 1 / lc;
  num_ *= inv;
  den_ *= inv;
}

ParamFraction ParamFraction::operator-() const { return ParamFraction(-num_, den_, Normalized{}); }

ParamFraction operator+(const ParamFraction& a, const ParamFraction& b) {
  require_same_arity(a.arity(), b.arity(), "ParamFraction add");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return ParamFraction(a.num_ + b.num_, a.den_, ParamFraction::Normalized{});
    return ParamFraction(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one() || b.den_.is_one()) {
    // p + c/d = (p d + c)/d is already reduced
    ParamFraction r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, ParamFraction::Normalized{});
    r.make_den_monic();
    return r;
  }
  ParamPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    ParamFraction r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, ParamFraction::Normalized{});
    r.make_den_monic();
    return r;
  }
  ParamPoly ad = exact(a.den_, g);
  ParamPoly bd = exact(b.den_, g);
  ParamPoly t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return ParamFraction(a.arity());
  ParamPoly h = gcd(t, g);
  ParamFraction r(exact(t, h), ad * bd * exact(g, h), ParamFraction::Normalized{});
  r.make_den_monic();
  return r;
}

ParamFraction operator*(const ParamFraction& a, const ParamFraction& b) {
  require_same_arity(a.arity(), b.arity(), "ParamFraction mul");
  if (a.is_zero() || b.is_zero()) return ParamFraction(a.arity());
  if (a.den_.is_one() && b.den_.is_one())
    return ParamFraction(a.num_ * b.num_, a.den_, ParamFraction::Normalized{});
  ParamPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one() && !an.is_constant()) {
    ParamPoly g = gcd(an, bd);
    if (!g.is_one()) {
      an = exact(an, g);
      bd = exact(bd, g);
    }
  }
  if (!ad.is_one() && !bn.is_constant()) {
    ParamPoly g = gcd(bn, ad);
    if (!g.is_one()) {
      bn = exact(bn, g);
      ad = exact(ad, g);
    }
  }
  ParamFraction r(an * bn, ad * bd, ParamFraction::Normalized{});
  r.make_den_monic();
  return r;
}

ParamFraction ParamFraction::inverse() const {
  if (is_zero()) throw DomainError("ParamFraction: division by zero");
  ParamFraction r(den_, num_, Normalized{});
  r.make_den_monic();
  return r;
}

ParamFraction operator/(const ParamFraction& a, const ParamFraction& b) { return a * b.inverse(); }

BigRational ParamFraction::evaluate(std::span<const BigRational> point) const {
  BigRational d = den_.evaluate(point);
  if (d == 0) throw DomainError("ParamFraction::evaluate: denominator vanishes");
  return num_.evaluate(point) / d;
}

std::string ParamFraction::to_string(std::span<const std::string> names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace parametra
