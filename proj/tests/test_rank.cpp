#include <gtest/gtest.h>

#include <set>

#include "pgcanon/error.hpp"
#include "pgcanon/rank.hpp"
#include "support.hpp"

namespace pgc {
namespace {

MatrixModP identity_matrix(std::size_t n, std::uint32_t p) {
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) rows[k][k] = 1;
  return MatrixModP(p, rows);
}

MatrixModP zero_matrix(std::size_t r, std::size_t c, std::uint32_t p) {
  return MatrixModP(p, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(c, 0)), c);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

// Every linear combination of rows, enumerated additively.
std::set<std::vector<std::uint32_t>> row_span(const MatrixModP& m) {
  std::set<std::vector<std::uint32_t>> span{std::vector<std::uint32_t>(m.cols(), 0)};
  std::vector<std::vector<std::uint32_t>> frontier(span.begin(), span.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& v : frontier)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto w = v;
        for (std::size_t j = 0; j < m.cols(); ++j) w[j] = (w[j] + m.at(r, j)) % m.modulus();
        if (span.insert(w).second) next.push_back(std::move(w));
      }
    frontier.swap(next);
  }
  return span;
}

TEST(ImageGroup, Examples) {
  EXPECT_EQ(build_chain(image_group_generators(zero_matrix(2, 3, 5))).order(), 1);
  EXPECT_EQ(build_chain(image_group_generators(identity_matrix(2, 2))).order(), 4);
  EXPECT_EQ(build_chain(image_group_generators(MatrixModP(2, {{1, 1}, {1, 1}}))).order(), 2);
}

TEST(Rank, Examples) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(rank_p(identity_matrix(4, p)), 4u);
  EXPECT_EQ(rank_p(zero_matrix(3, 3, 3)), 0u);
  EXPECT_EQ(rank_p(MatrixModP(2, {{1, 1}, {1, 1}})), 1u);
  EXPECT_EQ(code_of([] { rank_p(identity_matrix(2, 4)); }), ErrorCode::NonPrimeModulus);
}

TEST(GaussRank, Examples) {
  EXPECT_EQ(gauss_rank(identity_matrix(5, 3)), 5u);
  EXPECT_EQ(gauss_rank(zero_matrix(2, 2, 2)), 0u);
  EXPECT_EQ(gauss_rank(MatrixModP(5, {{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(code_of([] { gauss_rank(identity_matrix(2, 6)); }), ErrorCode::NonPrimeModulus);
}

TEST(Solvable, Examples) {
  const auto m = MatrixModP(4, {{2}});
  EXPECT_FALSE(solvable_mod_m(m, VecModM::reduced(4, {1})));
  EXPECT_TRUE(solvable_mod_m(m, VecModM::reduced(4, {2})));
  EXPECT_TRUE(solvable_mod_m(m, VecModM::reduced(4, {0})));
  EXPECT_TRUE(solvable_mod_m(identity_matrix(3, 6), VecModM::reduced(6, {5, 1, 4})));
  EXPECT_EQ(code_of([&] { solvable_mod_m(m, VecModM::reduced(4, {1, 2})); }),
            ErrorCode::LengthMismatch);
}

TEST(Matrix, ReducesAndValidates) {
  const MatrixModP m(5, {{-1, 7}});
  EXPECT_EQ(m.at(0, 0), 4u);
  EXPECT_EQ(m.at(0, 1), 2u);
  EXPECT_EQ(code_of([] { MatrixModP(5, {{1, 2}, {3}}); }), ErrorCode::LengthMismatch);
}

MatrixModP random_matrix(testing::Rng& rng, std::uint32_t p, std::size_t max_dim) {
  const std::size_t r = 1 + rng() % max_dim, c = 1 + rng() % max_dim;
  std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
  // Sparse-ish rows make low ranks and dependent rows common.
  for (auto& row : rows)
    for (auto& v : row) v = rng() % 3 == 0 ? static_cast<std::int64_t>(rng() % p) : 0;
  if (r > 1 && rng() % 2) rows[r - 1] = rows[0];
  return MatrixModP(p, rows);
}

TEST(RankProperties, MatchesGaussianElimination) {
  testing::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[trial % 4];
    const auto m = random_matrix(rng, p, 6);
    const std::size_t r = rank_p(m);
    EXPECT_EQ(r, gauss_rank(m));
    EXPECT_LE(r, std::min(m.rows(), m.cols()));
    BigCard power = 1;
    for (std::size_t k = 0; k < r; ++k) power *= p;
    EXPECT_EQ(build_chain(image_group_generators(m)).order(), power);
    EXPECT_LE(image_group_generators(m).gens.size(), m.rows());
    // Augmented-rank criterion for solvability.
    std::vector<std::int64_t> y(m.cols());
    for (auto& v : y) v = rng() % 2 ? static_cast<std::int64_t>(rng() % p) : 0;
    std::vector<std::vector<std::int64_t>> aug;
    for (std::size_t a = 0; a < m.rows(); ++a) aug.emplace_back(m.row(a).begin(), m.row(a).end());
    aug.push_back(y);
    EXPECT_EQ(solvable_mod_m(m, VecModM::reduced(p, y)), gauss_rank(MatrixModP(p, aug)) == r);
  }
}

TEST(RankProperties, CompositeModulusAgainstEnumeration) {
  testing::Rng rng(100);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t m = std::array<std::uint32_t, 3>{4, 6, 9}[trial % 3];
    const auto mat = random_matrix(rng, m, 3);
    const auto span = row_span(mat);
    EXPECT_EQ(build_chain(image_group_generators(mat)).order(), span.size());
    for (int q = 0; q < 10; ++q) {
      std::vector<std::int64_t> y(mat.cols());
      for (auto& v : y) v = rng() % m;
      const auto vec = VecModM::reduced(m, y);
      EXPECT_EQ(solvable_mod_m(mat, vec), span.contains(vec.entries));
    }
  }
}

}  // namespace
}  // namespace pgc
