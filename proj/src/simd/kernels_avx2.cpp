// Compiled with -mavx2. Only reached after a runtime CPU check.
#include <immintrin.h>

#include "pgcanon/simd/kernels.hpp"

namespace pgc::simd {
namespace {

constexpr std::size_t kLanes = 8;

void compose_avx2(Point* out, const Point* outer, const Point* inner, std::size_t n) {
  std::size_t x = 0;
  const int* base = reinterpret_cast<const int*>(outer);
  for (; x + kLanes <= n; x += kLanes) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + x));
    const __m256i img = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), img);
  }
  for (; x < n; ++x) out[x] = outer[inner[x]];
}

// AVX2 has no scatter; the scalar loop is already store-bound.
void invert_avx2(Point* out, const Point* perm, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) out[perm[x]] = static_cast<Point>(x);
}

std::size_t first_moved_avx2(const Point* perm, std::size_t n) {
  std::size_t x = 0;
  __m256i ramp = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(static_cast<int>(kLanes));
  for (; x + kLanes <= n; x += kLanes) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(perm + x));
    const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, ramp)));
    if (eq != 0xFF) return x + static_cast<std::size_t>(__builtin_ctz(~eq & 0xFF));
    ramp = _mm256_add_epi32(ramp, step);
  }
  for (; x < n; ++x)
    if (perm[x] != x) return x;
  return n;
}

std::size_t first_mismatch_avx2(const Point* a, const Point* b, std::size_t n) {
  std::size_t x = 0;
  for (; x + kLanes <= n; x += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + x));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + x));
    const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb)));
    if (eq != 0xFF) return x + static_cast<std::size_t>(__builtin_ctz(~eq & 0xFF));
  }
  for (; x < n; ++x)
    if (a[x] != b[x]) return x;
  return n;
}

void iota_avx2(Point* out, std::size_t n) {
  std::size_t x = 0;
  __m256i ramp = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(static_cast<int>(kLanes));
  for (; x + kLanes <= n; x += kLanes) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), ramp);
    ramp = _mm256_add_epi32(ramp, step);
  }
  for (; x < n; ++x) out[x] = static_cast<Point>(x);
}

// Reduction through a double-precision reciprocal. Inputs are below 2^31, so
// the quotient estimate is off by at most one and a single correction fixes it.
__m128i mod_epi32(__m256d value, __m256d modulus, __m256d inv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(value, inv));
  __m256d r = _mm256_sub_pd(value, _mm256_mul_pd(q, modulus));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, modulus, _CMP_GE_OQ), modulus));
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), modulus));
  return _mm256_cvtpd_epi32(r);
}

void axpy_mod_avx2(std::uint32_t* row, const std::uint32_t* other, std::uint32_t factor,
                   std::uint32_t modulus, std::size_t n) {
  std::size_t k = 0;
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256d vm = _mm256_set1_pd(static_cast<double>(modulus));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(modulus));
  for (; k + kLanes <= n; k += kLanes) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
    const __m256i o = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(other + k));
    const __m256i sum = _mm256_add_epi32(r, _mm256_mullo_epi32(o, vf));
    const __m128i lo = mod_epi32(_mm256_cvtepi32_pd(_mm256_castsi256_si128(sum)), vm, vinv);
    const __m128i hi = mod_epi32(_mm256_cvtepi32_pd(_mm256_extracti128_si256(sum, 1)), vm, vinv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + k), _mm256_set_m128i(hi, lo));
  }
  for (; k < n; ++k) row[k] = (row[k] + factor * other[k]) % modulus;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2",           compose_avx2, invert_avx2,
                                 first_moved_avx2, first_mismatch_avx2, iota_avx2,
                                 axpy_mod_avx2};
  return table;
}

}  // namespace pgc::simd
