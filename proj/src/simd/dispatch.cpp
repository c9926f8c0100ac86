#include <atomic>
#include <cstdlib>
#include <string_view>

#include "parametra/simd/exponent_kernels.hpp"

namespace parametra::simd {
namespace {

const ExponentKernels* select_default() {
  const char* env = std::getenv("PARAMETRA_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
  if (const ExponentKernels* avx = avx2_kernels()) return avx;
  return &scalar_kernels();
}

std::atomic<const ExponentKernels*>& active() {
  static std::atomic<const ExponentKernels*> table{select_default()};
  return table;
}

}  // namespace

const ExponentKernels& kernels() { return *active().load(std::memory_order_relaxed); }

void force_kernels(const ExponentKernels& table) {
  active().store(&table, std::memory_order_relaxed);
}

}  // namespace parametra::simd
