#pragma once

// Deterministic Schreier-Sims stabilizer chains.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgcanon/perm.hpp"

namespace pgc {

/// Exact group cardinality. Orders reach n! so machine integers are not enough.
using BigCard = boost::multiprecision::cpp_int;

std::string to_decimal(const BigCard& value);
BigCard from_decimal(std::string_view text);

/// A family of permutations on one domain. Duplicates and identities are allowed.
struct GeneratorSet {
  Domain domain;
  std::vector<Permutation> gens;

  GeneratorSet() = default;
  /// Throws DomainMismatch if some generator is not on `domain`.
  GeneratorSet(Domain domain, std::vector<Permutation> gens);

  static GeneratorSet empty(std::size_t n) { return GeneratorSet(Domain{n}, {}); }
};

class StabilizerChain {
 public:
  struct SiftResult {
    std::vector<Point> residue;
    std::size_t level = 0;  ///< first level the residue failed, or depth() when it passed all
  };

  StabilizerChain() = default;
  explicit StabilizerChain(Domain domain) : domain_(domain) {}
  /// Chain whose first levels use `initial_base` in order (levels may be
  /// trivial). Throws IndexOutOfRange on repeated or out-of-domain points.
  StabilizerChain(Domain domain, std::span<const Point> initial_base);

  Domain domain() const { return domain_; }
  std::size_t depth() const { return levels_.size(); }
  std::vector<Point> base() const;

  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }
  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }

  /// Coset representative u with u(base[level]) == point. Point must lie in the orbit.
  Permutation transversal(std::size_t level, Point point) const;

  /// Image tables of that representative and of its inverse, without copying.
  /// Empty when the point is not in the orbit.
  std::span<const Point> rep_images(std::size_t level, Point point) const;
  std::span<const Point> rep_inverse_images(std::size_t level, Point point) const;

  std::vector<Permutation> strong_generators() const;

  /// Strong generators fixing base points 0..level-1.
  std::vector<Permutation> level_generators(std::size_t level) const;

  BigCard order() const;

  /// Strips `images` through levels [from_level, depth). Throws DomainMismatch.
  SiftResult sift(std::span<const Point> images, std::size_t from_level = 0) const;

  bool contains(const Permutation& s) const;

  /// Adds one generator and restores completeness. Returns false when the
  /// generator already belonged to the group.
  bool add_generator(const Permutation& g);

 private:
  struct Level {
    Point base = 0;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit, -1 if absent
    std::vector<std::vector<Point>> reps;
    std::vector<std::vector<Point>> reps_inv;
    std::vector<std::size_t> gens;  // indices into strong_
    // Schreier pairs already verified: for each orbit position, the number of
    // leading entries of `gens` done.
    std::vector<std::size_t> verified;
    // For each orbit position, the number of leading entries of `gens` already applied.
    std::vector<std::size_t> expanded;
  };

  void append_level(Point base);
  void add_strong(std::vector<Point> gen, std::size_t first_level, std::size_t last_level);
  void extend_orbit(std::size_t level);
  void complete_from(std::size_t level);

  Domain domain_;
  std::vector<std::vector<Point>> strong_;
  std::vector<Level> levels_;
};

/// Stabilizer chain of <s>. Base points are taken in increasing point order.
StabilizerChain build_chain(const GeneratorSet& s);

BigCard order(const StabilizerChain& c);

/// Membership by sifting. Throws DomainMismatch.
bool contains(const StabilizerChain& c, const Permutation& s);

/// Membership decided by |<s>| == |<s, x>|. Throws DomainMismatch.
bool membership_by_order(const GeneratorSet& s, const Permutation& x);

/// Concatenation of generating sets. Throws DomainMismatch.
GeneratorSet union_span(std::span<const GeneratorSet> parts);

/// Every element of <s>, sorted. Throws CapExceeded when the group is larger than cap.
std::vector<Permutation> closure_bruteforce(const GeneratorSet& s, std::size_t cap);

}  // namespace pgc
