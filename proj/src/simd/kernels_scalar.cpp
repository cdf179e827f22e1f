#include "pgcanon/simd/kernels.hpp"

namespace pgc::simd {
namespace {

void compose_scalar(Point* out, const Point* outer, const Point* inner, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) out[x] = outer[inner[x]];
}

void invert_scalar(Point* out, const Point* perm, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) out[perm[x]] = static_cast<Point>(x);
}

std::size_t first_moved_scalar(const Point* perm, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x)
    if (perm[x] != x) return x;
  return n;
}

std::size_t first_mismatch_scalar(const Point* a, const Point* b, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x)
    if (a[x] != b[x]) return x;
  return n;
}

void iota_scalar(Point* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) out[x] = static_cast<Point>(x);
}

void axpy_mod_scalar(std::uint32_t* row, const std::uint32_t* other, std::uint32_t factor,
                     std::uint32_t modulus, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) row[k] = (row[k] + factor * other[k]) % modulus;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",          compose_scalar, invert_scalar,
                                 first_moved_scalar, first_mismatch_scalar, iota_scalar,
                                 axpy_mod_scalar};
  return table;
}

}  // namespace pgc::simd
