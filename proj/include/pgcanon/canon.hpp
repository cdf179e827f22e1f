#pragma once

// Canonical forms of graphs whose vertices come in ordered classes, each class
// carrying an enumerated abelian group acting regularly on it.
//
// Labelings are built from local labelings: anchoring class i at a point a
// numbers each b in the class by the enumeration index of the unique group
// element taking a to b. The set of labelings still in play is a coset of
// the product of the class groups, represented by a morphism and a value.
// Inter-class blocks are fixed greedily in lexicographic order of the class
// pair, each time keeping the labelings that give the smallest block.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pgcanon/group.hpp"
#include "pgcanon/morphism.hpp"
#include "pgcanon/perm.hpp"

namespace pgc {

using Edge = std::pair<Point, Point>;
/// Sorted, duplicate-free set of numeric pairs.
using PairSet = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Input as read from a file: class lists, directed edges, and per class the
/// enumeration of its group as class-local image sequences.
struct RawColoredGraph {
  std::size_t n = 0;
  std::vector<std::vector<Point>> classes;
  std::vector<Edge> edges;
  std::vector<std::vector<std::vector<Point>>> phi;

  friend bool operator==(const RawColoredGraph&, const RawColoredGraph&) = default;
};

/// Group tables of one class, indexed by class-local point and by
/// enumeration index.
struct ClassGroup {
  std::size_t size = 0;
  std::size_t offset = 0;  ///< first label of the class's numeric block
  std::vector<std::uint32_t> act;    ///< act[mu * size + x]: image of x under element mu
  std::vector<std::uint32_t> mul;    ///< mul[mu * size + nu]: index of (mu after nu)
  std::vector<std::uint32_t> inv;    ///< inv[mu]
  std::vector<std::uint32_t> shift;  ///< shift[a * size + b]: index of the element taking a to b

  std::uint32_t apply(std::uint32_t mu, std::uint32_t x) const { return act[mu * size + x]; }
  std::uint32_t times(std::uint32_t mu, std::uint32_t nu) const { return mul[mu * size + nu]; }
  std::uint32_t taking(std::uint32_t a, std::uint32_t b) const { return shift[a * size + b]; }
};

/// A validated graph. Edges are stored sorted and duplicate-free.
class AbelianColoredGraph {
 public:
  const RawColoredGraph& raw() const { return raw_; }
  std::size_t n() const { return raw_.n; }
  std::size_t class_count() const { return groups_.size(); }
  std::size_t class_size(std::size_t i) const { return groups_[i].size; }
  const ClassGroup& group(std::size_t i) const { return groups_[i]; }
  std::size_t class_of(Point p) const { return class_of_[p]; }
  std::uint32_t local_of(Point p) const { return local_of_[p]; }
  Point point(std::size_t i, std::uint32_t local) const { return raw_.classes[i][local]; }
  const std::vector<Edge>& edges() const { return raw_.edges; }

  /// Edges with both endpoints in class i.
  std::vector<Edge> intra_edges(std::size_t i) const;
  /// Edges between classes i and j, in both orientations.
  std::vector<Edge> block_edges(std::size_t i, std::size_t j) const;

 private:
  friend AbelianColoredGraph validate(const RawColoredGraph& raw);
  RawColoredGraph raw_;
  std::vector<ClassGroup> groups_;
  std::vector<std::size_t> class_of_;
  std::vector<std::uint32_t> local_of_;
};

/// Checks partition, enumeration, group closure, commutativity and
/// transitivity. Throws OverlappingClasses, UncoveredPoint,
/// WrongEnumerationLength, NotABijection, NotAGroup, NotAbelian,
/// NotTransitive, EdgeOutOfRange.
AbelianColoredGraph validate(const RawColoredGraph& raw);

inline constexpr std::uint32_t kUnlabeled = 0xFFFFFFFFu;

/// Partial map from points to numbers; kUnlabeled where undefined.
struct Labeling {
  std::vector<std::uint32_t> value;

  bool defined(Point p) const { return p < value.size() && value[p] != kUnlabeled; }
};

struct LocalLabeling {
  std::size_t class_index = 0;
  Point anchor = 0;
  Labeling table;
};

/// table(b) = offset(i) + index of the element taking `anchor` to b.
/// Throws WrongClass when anchor is not in class i.
LocalLabeling local_labeling(const AbelianColoredGraph& g, std::size_t i, Point anchor);

/// Union of labelings with disjoint domains. Throws OverlappingClasses.
Labeling join_labelings(const Labeling& a, const Labeling& b);
Labeling join_labelings(const LocalLabeling& a, const LocalLabeling& b);

/// {(l(u), l(v)) | (u, v) in pairs}, sorted. Throws UncoveredPoint.
PairSet encode_relative(const std::vector<Edge>& pairs, const Labeling& l);

/// Block order: a set is smaller when, at the first pair on which the two
/// sets differ, it contains that pair. Returns <0, 0 or >0.
int compare_blocks(const PairSet& a, const PairSet& b);

// ---------------------------------------------------------------------------
// Labeling cosets.
//
// The ambient group acts on the points (b, x) with b and x in a common class:
// element lambda puts a group element lambda_b of b's class on layer b.

struct GroupLayout {
  std::vector<std::size_t> layer_base;  ///< per class, first point of its layers
  std::size_t size = 0;
};

GroupLayout group_layout(const AbelianColoredGraph& g);

/// Generator for (i, s) acts on layer b of class i as the element taking s to
/// b, and trivially elsewhere.
GeneratorSet labeling_group_generators(const AbelianColoredGraph& g);

/// The ambient element whose layer b carries the element taking the anchor of
/// b's class to b. Anchors are points, one per class.
Permutation labeling_element(const AbelianColoredGraph& g, const std::vector<Point>& anchors);

/// Component (a, b), for a and b in one class, acts as lambda_a lambda_b^-1
/// on that class. Throws NotBlockDiagonal.
PermMorphism init_morphism(const AbelianColoredGraph& g);
Permutation init_morphism_eval(const AbelianColoredGraph& g, const Permutation& lambda);
/// Component (a, b) is the element taking b to a.
Permutation init_value(const AbelianColoredGraph& g);

/// Coset representatives of the pairs (alpha, beta) in the product of the
/// groups of classes i and j, modulo those preserving the edges between them.
struct BlockCosets {
  std::size_t i = 0, j = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps;  ///< lexicographically minimal, ascending
  std::vector<std::uint32_t> coset_of;  ///< (alpha * size_j + beta) -> index into reps

  std::size_t size() const { return reps.size(); }
};

BlockCosets block_cosets(const AbelianColoredGraph& g, std::size_t i, std::size_t j);

/// Left multiplication by (alpha, beta) on the cosets. Throws IndexOutOfRange.
Permutation coset_action(const AbelianColoredGraph& g, const BlockCosets& bc, std::uint32_t alpha,
                     std::uint32_t beta);

/// Component (a, b) in A_i x A_j acts on the cosets as the class of
/// (lambda_a, lambda_b). Throws NotBlockDiagonal.
PermMorphism block_morphism(const AbelianColoredGraph& g, std::shared_ptr<const BlockCosets> bc);
Permutation block_morphism_eval(const AbelianColoredGraph& g, const BlockCosets& bc, const Permutation& lambda);

/// The value the block morphism takes on labelings that encode block (i, j) like anchors
/// (ai, aj). Throws WrongClass.
Permutation block_value(const AbelianColoredGraph& g, const BlockCosets& bc, Point ai, Point aj);

// ---------------------------------------------------------------------------
// Canonization.

struct CanonOptions {
  /// Decide compatibility by rebuilding an image chain of the accumulated
  /// morphism per candidate instead of using the maintained kernel.
  bool reference_emptiness = false;
  /// Debug hook: reverses the block order inside canonize only.
  bool corrupt_order = false;
};

struct CanonState {
  std::shared_ptr<const AbelianColoredGraph> graph;
  GeneratorSet group;
  /// The labelings still in play: {lambda in <group> : morphism(lambda) = value}.
  MorphismCoset coset;
  /// The same set as offset * <kernel>.
  Permutation offset;
  GeneratorSet kernel;
  std::vector<std::pair<std::size_t, std::size_t>> processed;
  std::vector<PairSet> blocks;
};

CanonState initial_state(std::shared_ptr<const AbelianColoredGraph> g);

/// Pairs (a, b) in A_i x A_j such that some labeling in the coset agrees with
/// the anchors (a, b) on block (i, j).
std::vector<Edge> compatible_pairs(const CanonState& st, std::size_t i, std::size_t j,
                                   const CanonOptions& opt = {});

struct MinPairs {
  std::vector<Edge> pairs;
  PairSet block;
  Permutation value;  ///< the block value shared by every winning pair
  std::shared_ptr<const BlockCosets> cosets;
  /// The block morphism restricted to the state's kernel, reused by apply_block; may be null.
  std::shared_ptr<const MorphismSplit> split;
};

/// Compatible pairs with the smallest block encoding. Throws EmptyCompatibleSet
/// and InvariantViolation when the winners disagree on the block value.
MinPairs min_pairs(const CanonState& st, std::size_t i, std::size_t j, const CanonOptions& opt = {});

/// Restricts the coset to the winners of block (i, j) and records the block.
void apply_block(CanonState& st, std::size_t i, std::size_t j, const MinPairs& mp);

/// Splits classes until every anchor of a class gives the same intra-class
/// encoding; each part carries the stabilizer of the intra edges, enumerated
/// in the order induced by the original enumeration.
AbelianColoredGraph refine_intra(const AbelianColoredGraph& g);

struct CanonicalForm {
  std::size_t n = 0;
  std::vector<std::size_t> class_sizes;
  PairSet edges;
  std::vector<std::vector<std::vector<Point>>> phi;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonResult {
  CanonicalForm form;
  CanonState state;
  std::vector<PairSet> intra_blocks;
};

CanonResult canonize_detailed(const AbelianColoredGraph& g, const CanonOptions& opt = {});
CanonicalForm canonize(const AbelianColoredGraph& g, const CanonOptions& opt = {});

/// Brute force over every anchor tuple. Throws CapExceeded when the number of
/// tuples exceeds cap.
CanonicalForm canon_oracle(const AbelianColoredGraph& g, std::size_t cap);

/// An anchor tuple whose labeling lies in the final coset and reproduces every
/// emitted block. Throws CapExceeded.
std::vector<Point> witness(const CanonResult& r, std::size_t cap);

/// Numeric labels of the labeling given by one anchor per class.
Labeling anchored_labeling(const AbelianColoredGraph& g, const std::vector<Point>& anchors);

}  // namespace pgc
