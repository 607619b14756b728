// AVX2 variants of the counting/gather kernels. Compiled with -mavx2 in a
// separate TU; only reached through the runtime dispatcher in kernels.cpp.

#include "permcalc/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace permcalc::kernels::detail {

namespace {

// 32-bit lane counters are flushed every kFlush vectors, long before they
// can saturate.
constexpr std::size_t kFlush = std::size_t(1) << 24;

// Sum of the eight 32-bit lanes.
inline std::uint64_t hsum_epi32(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_unpackhi_epi64(s, s));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 1));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

}  // namespace

std::size_t avx2_count_fixed(const std::uint32_t* img, std::size_t n) {
  std::size_t count = 0;
  std::size_t i = 0;
  const __m256i step = _mm256_set1_epi32(8);
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  while (i + 8 <= n) {
    std::size_t vectors = std::min(((n - i) / 8), kFlush);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t v = 0; v < vectors; ++v, i += 8) {
      __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(img + i));
      acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(x, iota));  // cmpeq = -1 per hit
      iota = _mm256_add_epi32(iota, step);
    }
    count += hsum_epi32(acc);
  }
  for (; i < n; ++i) count += (img[i] == static_cast<std::uint32_t>(i));
  return count;
}

std::size_t avx2_count_diff(const std::uint32_t* a, const std::uint32_t* b,
                            std::size_t n) {
  std::size_t equal = 0;
  std::size_t i = 0;
  while (i + 8 <= n) {
    std::size_t vectors = std::min(((n - i) / 8), kFlush);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t v = 0; v < vectors; ++v, i += 8) {
      __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(va, vb));
    }
    equal += hsum_epi32(acc);
  }
  for (; i < n; ++i) equal += (a[i] == b[i]);
  return n - equal;
}

void avx2_compose_into(std::uint32_t* dst, const std::uint32_t* p,
                       const std::uint32_t* q, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q + i));
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(p), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
  }
  for (; i < n; ++i) dst[i] = p[q[i]];
}

}  // namespace permcalc::kernels::detail

#endif  // x86-64
