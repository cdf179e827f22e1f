#include <cstdlib>
#include <string_view>

#include "pgcanon/simd/kernels.hpp"

namespace pgc::simd {

#if defined(PGC_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(PGC_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  if (supported) return &avx2_kernel_table();
#endif
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* force = std::getenv("PGC_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) == "1") return scalar_kernels();
    if (const KernelTable* fast = avx2_kernels()) return *fast;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace pgc::simd
