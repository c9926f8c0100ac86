#include "parametra/simd/exponent_kernels.hpp"

#include <algorithm>

namespace parametra::simd {
namespace {

void add_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void max_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(a[i], b[i]);
}

void min_scalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min(a[i], b[i]);
}

bool divides_scalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool disjoint_scalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::int64_t total_scalar(const Exponent* a, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

std::int64_t dot_scalar(const Exponent* a, const Exponent* w, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<std::int64_t>(a[i]) * w[i];
  return s;
}

std::ptrdiff_t last_difference_scalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::ptrdiff_t first_difference_scalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

}  // namespace

const ExponentKernels& scalar_kernels() {
  static const ExponentKernels table{
      "scalar",         add_scalar,   sub_scalar, max_scalar, min_scalar,
      divides_scalar,   disjoint_scalar, total_scalar, dot_scalar,
      last_difference_scalar, first_difference_scalar};
  return table;
}

}  // namespace parametra::simd
