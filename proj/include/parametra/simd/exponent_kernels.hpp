#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace parametra::simd {

using Exponent = std::int32_t;

// Data-parallel kernels over packed exponent vectors. Every monomial
// operation of the polynomial layers funnels through one of these tables.
// All pointers must address `n` valid elements; `out` may alias an input.
struct ExponentKernels {
  std::string_view name;
  void (*add)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  void (*sub)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  void (*max)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  void (*min)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  // true iff a[i] <= b[i] for every i, i.e. x^a divides x^b
  bool (*divides)(const Exponent* a, const Exponent* b, std::size_t n);
  // true iff no index has both a[i] > 0 and b[i] > 0
  bool (*disjoint)(const Exponent* a, const Exponent* b, std::size_t n);
  std::int64_t (*total)(const Exponent* a, std::size_t n);
  std::int64_t (*dot)(const Exponent* a, const Exponent* w, std::size_t n);
  // index of the last position where a and b differ, or -1 if equal
  std::ptrdiff_t (*last_difference)(const Exponent* a, const Exponent* b, std::size_t n);
  // index of the first position where a and b differ, or -1 if equal
  std::ptrdiff_t (*first_difference)(const Exponent* a, const Exponent* b, std::size_t n);
};

const ExponentKernels& scalar_kernels();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const ExponentKernels* avx2_kernels();

// Selected once at first use: AVX2 when available unless the environment
// variable PARAMETRA_SIMD is set to "scalar".
const ExponentKernels& kernels();

// Overrides the active table (tests and benchmarks).
void force_kernels(const ExponentKernels& table);

}  // namespace parametra::simd
