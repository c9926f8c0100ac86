#include "parametra/arith/monomial.hpp"

namespace parametra {

bool Monomial::is_one() const {
  for (Exponent x : e_)
    if (x != 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent x : e_) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 0x100000001b3ull;
  }
  return h;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) {
  const auto& k = simd::kernels();
  std::int64_t da = k.total(a.data(), a.arity());
  std::int64_t db = k.total(b.data(), b.arity());
  if (da != db) return da < db ? -1 : 1;
  std::ptrdiff_t i = k.last_difference(a.data(), b.data(), a.arity());
  if (i < 0) return 0;
  // smaller exponent in the last differing variable wins
  return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? 1 : -1;
}

int compare_lex(const Monomial& a, const Monomial& b) {
  std::ptrdiff_t i = simd::kernels().first_difference(a.data(), b.data(), a.arity());
  if (i < 0) return 0;
  return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
}

}  // namespace parametra
