#include "tourlab/kernels.hpp"

namespace tourlab::kernels::scalar {

void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

}  // namespace tourlab::kernels::scalar
