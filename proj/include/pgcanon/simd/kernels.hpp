#pragma once

// Inner loops over permutation image tables.
//
// Every kernel exists as a scalar reference implementation and, on x86-64,
// as an AVX2 variant. The active table is chosen once at startup from the
// CPU feature bits; PGC_FORCE_SCALAR=1 in the environment pins the scalar
// table. Tests compare both tables element-for-element.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pgc::simd {

using Point = std::uint32_t;

struct KernelTable {
  std::string_view name;

  /// out[x] = outer[inner[x]] for x < n (apply `inner` first).
  void (*compose)(Point* out, const Point* outer, const Point* inner, std::size_t n);

  /// out[perm[x]] = x.
  void (*invert)(Point* out, const Point* perm, std::size_t n);

  /// Smallest x with perm[x] != x, or n if perm is the identity.
  std::size_t (*first_moved)(const Point* perm, std::size_t n);

  /// Smallest x with a[x] != b[x], or n when equal.
  std::size_t (*first_mismatch)(const Point* a, const Point* b, std::size_t n);

  /// Fills out with 0..n-1.
  void (*iota)(Point* out, std::size_t n);

  /// row[k] = (row[k] + factor * other[k]) mod modulus. Entries are < modulus < 2^15.
  void (*axpy_mod)(std::uint32_t* row, const std::uint32_t* other, std::uint32_t factor,
                   std::uint32_t modulus, std::size_t n);
};

const KernelTable& scalar_kernels();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();

/// Table used by the library.
const KernelTable& active();

}  // namespace pgc::simd
