#include <gtest/gtest.h>

#include <numeric>

#include "pgcanon/simd/kernels.hpp"
#include "support.hpp"

namespace pgc {
namespace {

using simd::KernelTable;

const KernelTable* vector_table() { return simd::avx2_kernels(); }

TEST(Kernels, ActiveTableIsKnown) {
  const auto name = simd::active().name;
  EXPECT_TRUE(name == "scalar" || name == "avx2") << name;
}

TEST(Kernels, ScalarReferenceExamples) {
  const auto& k = simd::scalar_kernels();
  const Point outer[] = {1, 0, 2}, inner[] = {0, 2, 1};
  Point out[3];
  k.compose(out, outer, inner, 3);
  EXPECT_EQ(std::vector<Point>(out, out + 3), (std::vector<Point>{1, 2, 0}));
  const Point cyc[] = {1, 2, 0};
  k.invert(out, cyc, 3);
  EXPECT_EQ(std::vector<Point>(out, out + 3), (std::vector<Point>{2, 0, 1}));
  const Point id[] = {0, 1, 2, 4, 3};
  EXPECT_EQ(k.first_moved(id, 5), 3u);
  EXPECT_EQ(k.first_moved(id, 3), 3u);
  std::uint32_t row[] = {1, 2, 3}, other[] = {4, 4, 4};
  k.axpy_mod(row, other, 3, 5, 3);
  EXPECT_EQ(std::vector<std::uint32_t>(row, row + 3), (std::vector<std::uint32_t>{3, 4, 0}));
}

// Lengths straddle the 8-lane width so tails are exercised.
TEST(Kernels, VectorMatchesScalar) {
  const KernelTable* v = vector_table();
  if (v == nullptr) GTEST_SKIP() << "no vector kernels on this machine";
  const auto& s = simd::scalar_kernels();
  testing::Rng rng(5);
  for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 100u, 1023u, 4096u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing::random_perm(rng, n), b = testing::random_perm(rng, n);
      std::vector<Point> x(n), y(n);
      s.compose(x.data(), a.data(), b.data(), n);
      v->compose(y.data(), a.data(), b.data(), n);
      EXPECT_EQ(x, y);
      s.invert(x.data(), a.data(), n);
      v->invert(y.data(), a.data(), n);
      EXPECT_EQ(x, y);
      s.iota(x.data(), n);
      v->iota(y.data(), n);
      EXPECT_EQ(x, y);
      // Identity with one late moved pair, so first_moved scans past whole lanes.
      if (n >= 2) {
        const std::size_t at = rng() % (n - 1);
        std::swap(x[at], x[at + 1]);
      }
      EXPECT_EQ(s.first_moved(x.data(), n), v->first_moved(x.data(), n));
      EXPECT_EQ(s.first_moved(y.data(), n), v->first_moved(y.data(), n));
      EXPECT_EQ(s.first_mismatch(x.data(), y.data(), n), v->first_mismatch(x.data(), y.data(), n));
      EXPECT_EQ(s.first_mismatch(a.data(), a.data(), n), v->first_mismatch(a.data(), a.data(), n));
      for (std::uint32_t p : {2u, 3u, 7u, 251u, 32749u}) {
        std::vector<std::uint32_t> r1(n), r2, o(n);
        for (std::size_t j = 0; j < n; ++j) {
          r1[j] = static_cast<std::uint32_t>(rng() % p);
          o[j] = static_cast<std::uint32_t>(rng() % p);
        }
        r2 = r1;
        const auto f = static_cast<std::uint32_t>(rng() % p);
        s.axpy_mod(r1.data(), o.data(), f, p, n);
        v->axpy_mod(r2.data(), o.data(), f, p, n);
        EXPECT_EQ(r1, r2) << "p=" << p << " n=" << n;
      }
    }
  }
}

}  // namespace
}  // namespace pgc
