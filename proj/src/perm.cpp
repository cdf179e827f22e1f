#include "pgcanon/perm.hpp"

#include <sstream>

#include "pgcanon/error.hpp"
#include "pgcanon/simd/kernels.hpp"

namespace pgc {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> images(n);
  simd::active().iota(images.data(), n);
  return adopt(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t x = 0; x < images.size(); ++x) {
    const Point y = images[x];
    if (y >= images.size())
      throw Error(ErrorCode::NotABijection,
                  "image " + std::to_string(y) + " of point " + std::to_string(x) + " out of range");
    if (seen[y])
      throw Error(ErrorCode::NotABijection, "duplicate image " + std::to_string(y));
    seen[y] = true;
  }
  return adopt(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(n);
  simd::active().iota(images.data(), n);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point x = cycle[k];
      if (x >= n || used[x])
        throw Error(ErrorCode::NotABijection, "bad cycle point " + std::to_string(x));
      used[x] = true;
      images[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return adopt(std::move(images));
}

bool Permutation::is_identity() const {
  return simd::active().first_moved(images_.data(), images_.size()) == images_.size();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    out << '(';
    Point y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << y;
      first = false;
      y = images_[y];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::size_t h = 1469598103934665603ULL;
  for (Point y : p.images()) {
    h ^= y;
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size())
    throw Error(ErrorCode::DomainMismatch, "compose: domains of size " + std::to_string(s.size()) +
                                               " and " + std::to_string(t.size()));
  std::vector<Point> out(s.size());
  simd::active().compose(out.data(), s.data(), t.data(), s.size());
  return Permutation::adopt(std::move(out));
}

Permutation inverse(const Permutation& s) {
  std::vector<Point> out(s.size());
  simd::active().invert(out.data(), s.data(), s.size());
  return Permutation::adopt(std::move(out));
}

RelationGraph graph_of(const Permutation& s) {
  RelationGraph r{s.domain(), {}};
  r.pairs.reserve(s.size());
  for (Point x = 0; x < s.size(); ++x) r.pairs.emplace_back(x, s(x));
  return r;
}

Permutation perm_from_graph(const RelationGraph& r) {
  const std::size_t n = r.domain.size;
  constexpr Point kUnset = static_cast<Point>(-1);
  std::vector<Point> images(n, kUnset);
  std::vector<bool> hit(n, false);
  for (const auto& [x, y] : r.pairs) {
    if (x >= n || y >= n)
      throw Error(ErrorCode::NotAPermutationGraph, "pair out of domain");
    if (images[x] != kUnset) {
      if (images[x] == y) continue;  // repeated pair, still a function
      throw Error(ErrorCode::NotAPermutationGraph,
                  "point " + std::to_string(x) + " has two images");
    }
    if (hit[y])
      throw Error(ErrorCode::NotAPermutationGraph, "point " + std::to_string(y) + " hit twice");
    images[x] = y;
    hit[y] = true;
  }
  for (Point x = 0; x < n; ++x)
    if (images[x] == kUnset)
      throw Error(ErrorCode::NotAPermutationGraph, "point " + std::to_string(x) + " has no image");
  return Permutation::adopt(std::move(images));
}

}  // namespace pgc
