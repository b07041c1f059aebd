#include <atomic>
#include <cstdlib>
#include <string_view>

#include "tourlab/kernels.hpp"

namespace tourlab::kernels {

namespace {

using AddFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t) noexcept;

AddFn add_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2: return &avx2::add_u32;
    case Isa::Neon: return &neon::add_u32;
    case Isa::Scalar: break;
  }
  return &scalar::add_u32;
}

Isa default_isa() noexcept {
  if (const char* env = std::getenv("TOURLAB_SIMD")) {
    const std::string_view want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa) && isa_supported(isa)) return isa;
    }
  }
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

struct Active {
  std::atomic<Isa> isa{default_isa()};
  std::atomic<AddFn> add{add_for(isa.load())};
};

Active& active() noexcept {
  static Active a;
  return a;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return active().isa.load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
  if (!isa_supported(isa)) return false;
  active().isa.store(isa, std::memory_order_relaxed);
  active().add.store(add_for(isa), std::memory_order_relaxed);
  return true;
}

void add_u32(std::uint32_t* dst, const std::uint32_t* src, std::size_t n) noexcept {
  active().add.load(std::memory_order_relaxed)(dst, src, n);
}

}  // namespace tourlab::kernels
