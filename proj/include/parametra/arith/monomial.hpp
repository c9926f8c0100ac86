#pragma once

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include "parametra/simd/exponent_kernels.hpp"

namespace parametra {

using simd::Exponent;

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exponent vector x^e over a fixed number of variables.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 12>;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : e_(arity, 0) {}
  Monomial(std::initializer_list<Exponent> e) : e_(e.begin(), e.end()) {}
  explicit Monomial(std::span<const Exponent> e) : e_(e.begin(), e.end()) {}

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1) {
    Monomial m(arity);
    m.e_[index] = power;
    return m;
  }

  std::size_t arity() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  const Exponent* data() const { return e_.data(); }
  Exponent* data() { return e_.data(); }
  std::span<const Exponent> exponents() const { return {e_.data(), e_.size()}; }

  std::int64_t degree() const { return simd::kernels().total(e_.data(), e_.size()); }
  bool is_one() const;

  // x^this divides x^other
  bool divides(const Monomial& other) const {
    return simd::kernels().divides(e_.data(), other.e_.data(), e_.size());
  }
  bool coprime_with(const Monomial& other) const {
    return simd::kernels().disjoint(e_.data(), other.e_.data(), e_.size());
  }

  Monomial& operator*=(const Monomial& o) {
    simd::kernels().add(e_.data(), o.e_.data(), e_.data(), e_.size());
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    simd::kernels().sub(a.e_.data(), b.e_.data(), r.e_.data(), a.arity());
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    simd::kernels().max(a.e_.data(), b.e_.data(), r.e_.data(), a.arity());
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    simd::kernels().min(a.e_.data(), b.e_.data(), r.e_.data(), a.arity());
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity() == b.arity() &&
           simd::kernels().first_difference(a.e_.data(), b.e_.data(), a.arity()) < 0;
  }

  std::size_t hash() const;

 private:
  Storage e_;
};

// Graded reverse lexicographic comparison: -1, 0, +1.
int compare_degrevlex(const Monomial& a, const Monomial& b);
int compare_lex(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

inline void require_same_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw ArityError(std::string(what) + ": arity mismatch");
}

}  // namespace parametra
