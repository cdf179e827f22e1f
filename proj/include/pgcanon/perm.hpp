#pragma once

// Permutations of a finite dense domain {0, ..., n-1}.
//
// Composition convention: compose(s, t) applies t FIRST, then s, so
// compose(s, t)(x) == s(t(x)). Every module in this library uses that order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgc {

using Point = std::uint32_t;

struct Domain {
  std::size_t size = 0;

  friend bool operator==(const Domain&, const Domain&) = default;
};

class Permutation {
 public:
  /// Identity on the empty domain.
  Permutation() = default;

  static Permutation identity(std::size_t n);

  /// Throws NotABijection on duplicate or out-of-range images.
  static Permutation from_images(std::vector<Point> images);
  static Permutation from_images(std::initializer_list<Point> images) {
    return from_images(std::vector<Point>(images));
  }

  /// Takes ownership without validation. Callers guarantee a bijection.
  static Permutation adopt(std::vector<Point> images) noexcept {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Cycle notation on n points, e.g. {{0, 1, 2}, {4, 5}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  Domain domain() const { return Domain{images_.size()}; }
  std::size_t size() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  const Point* data() const { return images_.data(); }

  bool is_identity() const;

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// s after t. Throws DomainMismatch.
Permutation compose(const Permutation& s, const Permutation& t);

Permutation inverse(const Permutation& s);

/// Set of (point, image) pairs on a domain.
struct RelationGraph {
  Domain domain;
  std::vector<std::pair<Point, Point>> pairs;
};

/// graph(s) = {(x, s(x))}, sorted by source.
RelationGraph graph_of(const Permutation& s);

/// Inverse of graph_of. Throws NotAPermutationGraph when the pairs are not
/// the graph of a bijection of the domain.
Permutation perm_from_graph(const RelationGraph& r);

}  // namespace pgc
