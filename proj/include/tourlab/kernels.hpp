#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tourlab::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;

/// Kernel set used by the library. Defaults to the widest supported ISA;
/// TOURLAB_SIMD=scalar|avx2|neon in the environment overrides the default.
Isa active_isa() noexcept;
/// Switches the process-wide kernel set. Returns false if the ISA is not supported.
bool set_active_isa(Isa isa) noexcept;

// dst[i] += src[i] for i < n. Counts never exceed 10! so 32 bits suffice.
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept;

namespace scalar {
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept;
}
namespace avx2 {
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept;
}
namespace neon {
void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept;
}

}  // namespace tourlab::kernels
