#include "parametra/simd/exponent_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define PARAMETRA_HAVE_AVX2_KERNELS 1
#endif

namespace parametra::simd {

#ifdef PARAMETRA_HAVE_AVX2_KERNELS
namespace {

#define AVX2_FN __attribute__((target("avx2")))

constexpr std::size_t kLanes = 8;

AVX2_FN inline __m256i load(const Exponent* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

AVX2_FN inline void store(Exponent* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

AVX2_FN void add_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out + i, _mm256_add_epi32(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

AVX2_FN void sub_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out + i, _mm256_sub_epi32(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

AVX2_FN void max_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out + i, _mm256_max_epi32(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

AVX2_FN void min_avx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out + i, _mm256_min_epi32(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
}

AVX2_FN bool divides_avx2(const Exponent* a, const Exponent* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i gt = _mm256_cmpgt_epi32(load(a + i), load(b + i));
    if (!_mm256_testz_si256(gt, gt)) return false;
  }
  for (; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

AVX2_FN bool disjoint_avx2(const Exponent* a, const Exponent* b, std::size_t n) {
  std::size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + kLanes <= n; i += kLanes) {
    __m256i both = _mm256_and_si256(_mm256_cmpgt_epi32(load(a + i), zero),
                                    _mm256_cmpgt_epi32(load(b + i), zero));
    if (!_mm256_testz_si256(both, both)) return false;
  }
  for (; i < n; ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

AVX2_FN std::int64_t horizontal_sum(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

AVX2_FN std::int64_t total_avx2(const Exponent* a, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= n; i += kLanes) {
    __m256i v = load(a + i);
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1)));
  }
  std::int64_t s = horizontal_sum(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

AVX2_FN std::int64_t dot_avx2(const Exponent* a, const Exponent* w, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= n; i += kLanes) {
    __m256i va = load(a + i);
    __m256i vw = load(w + i);
    // _mm256_mul_epi32 multiplies the even lanes into 64-bit products
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vw));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vw, 32)));
  }
  std::int64_t s = horizontal_sum(acc);
  for (; i < n; ++i) s += static_cast<std::int64_t>(a[i]) * w[i];
  return s;
}

AVX2_FN std::ptrdiff_t last_difference_avx2(const Exponent* a, const Exponent* b, std::size_t n) {
  std::size_t tail = n % kLanes;
  for (std::size_t i = n; i-- > n - tail;)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  for (std::size_t blk = (n - tail); blk >= kLanes; blk -= kLanes) {
    std::size_t base = blk - kLanes;
    __m256i eq = _mm256_cmpeq_epi32(load(a + base), load(b + base));
    unsigned mask = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & 0xffu;
    if (mask) return static_cast<std::ptrdiff_t>(base + 31 - __builtin_clz(mask));
  }
  return -1;
}

AVX2_FN std::ptrdiff_t first_difference_avx2(const Exponent* a, const Exponent* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i eq = _mm256_cmpeq_epi32(load(a + i), load(b + i));
    unsigned mask = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & 0xffu;
    if (mask) return static_cast<std::ptrdiff_t>(i + __builtin_ctz(mask));
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

#undef AVX2_FN

}  // namespace

const ExponentKernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const ExponentKernels table{
      "avx2",        add_avx2,   sub_avx2,   max_avx2, min_avx2,
      divides_avx2,  disjoint_avx2, total_avx2, dot_avx2,
      last_difference_avx2, first_difference_avx2};
  return supported ? &table : nullptr;
}

#else

const ExponentKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace parametra::simd
