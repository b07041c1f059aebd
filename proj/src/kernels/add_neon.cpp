#include "tourlab/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>
#define TOURLAB_HAVE_NEON_TU 1
#endif

namespace tourlab::kernels::neon {

#if TOURLAB_HAVE_NEON_TU
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_u32(dst + i, vaddq_u32(vld1q_u32(dst + i), vld1q_u32(src + i)));
  for (; i < n; ++i) dst[i] += src[i];
}
#else
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept {
  scalar::add_u32(dst, src, n);
}
#endif

}  // namespace tourlab::kernels::neon
