#include "tourlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TOURLAB_HAVE_AVX2_TU 1
#endif

namespace tourlab::kernels::avx2 {

#if TOURLAB_HAVE_AVX2_TU
// Compiled with -mavx2; only reached after a runtime cpuid check.
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 8));
    const __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 8));
    d0 = _mm256_add_epi32(d0, s0);
    d1 = _mm256_add_epi32(d1, s1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 8), d1);
  }
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi32(d, s));
  }
  if (i < n) {
    // Masked tail: lanes past n are neither read nor written.
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i mask = _mm256_cmpgt_epi32(_mm256_set1_epi32(static_cast<int>(n - i)), lane);
    const __m256i d = _mm256_maskload_epi32(reinterpret_cast<const int*>(dst + i), mask);
    const __m256i s = _mm256_maskload_epi32(reinterpret_cast<const int*>(src + i), mask);
    _mm256_maskstore_epi32(reinterpret_cast<int*>(dst + i), mask, _mm256_add_epi32(d, s));
  }
}
#else
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept {
  scalar::add_u32(dst, src, n);
}
#endif

}  // namespace tourlab::kernels::avx2
