#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pgcanon/group.hpp"
#include "pgcanon/perm.hpp"

namespace pgc::testing {

using Rng = std::mt19937_64;

inline Permutation random_perm(Rng& rng, std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

inline Permutation transposition(std::size_t n, Point a, Point b) {
  return Permutation::from_cycles(n, {{a, b}});
}

inline GeneratorSet all_transpositions(std::size_t n) {
  GeneratorSet s = GeneratorSet::empty(n);
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) s.gens.push_back(transposition(n, a, b));
  return s;
}

/// Random generating set; with `small` set, generators are short cycles so the
/// closure usually stays below S_n.
inline GeneratorSet random_generators(Rng& rng, std::size_t n, std::size_t count, bool small) {
  GeneratorSet s = GeneratorSet::empty(n);
  for (std::size_t k = 0; k < count; ++k) {
    if (!small) {
      s.gens.push_back(random_perm(rng, n));
      continue;
    }
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t len = std::min<std::size_t>(n, 2 + rng() % 2);
    pts.resize(len);
    s.gens.push_back(Permutation::from_cycles(n, {pts}));
  }
  return s;
}

inline bool in_sorted(const std::vector<Permutation>& sorted, const Permutation& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

inline BigCard factorial(std::size_t n) {
  BigCard f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace pgc::testing
