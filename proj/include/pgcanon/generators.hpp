#pragma once

// Seeded instance generators and admissible relabelings.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgcanon/canon.hpp"

namespace pgc {

struct CyclicParams {
  std::vector<std::size_t> class_sizes;
  /// Probability of each directed inter-class pair being an edge.
  double density = 0.3;
  /// Probability of each directed intra-class pair being an edge.
  double intra_density = 0.0;
  /// Adds the edges x -> x+1 (mod size) inside every class.
  bool cycle = false;
  /// Emit both orientations of every random edge.
  bool undirected = false;
  /// Use a random abelian group of the class size (not only cyclic), with
  /// shuffled element enumeration and point order.
  bool mixed = false;
};

/// Classes with regular abelian groups (cyclic unless `mixed`) and random edges.
RawColoredGraph gen_cyclic(const CyclicParams& params, std::uint64_t seed);

/// Two classes with cyclic groups and random undirected edges between them.
RawColoredGraph gen_bipartite(std::size_t left, std::size_t right, double density,
                              std::uint64_t seed);

struct BaseGraph {
  std::string name;
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// Named base graphs: triangle, square, k4, prism, k33, cube.
/// Throws ParseError for an unknown name.
BaseGraph base_graph(std::string_view name);
std::vector<std::string> base_graph_names();

/// Gadget graph over a base graph. Each vertex of degree d contributes a class
/// of the 2^(d-1) even subsets of its edges, acted on by symmetric difference
/// with even subsets; each edge end contributes a two-point class. With
/// `twisted`, the connection across base edge `twist_edge` is crossed.
RawColoredGraph gen_cfi(const BaseGraph& base, bool twisted, std::size_t twist_edge = 0);

/// One Z4 class on {0,1,2,3}, rotations in order, edges the directed 4-cycle.
RawColoredGraph four_cycle_graph();
/// Classes {0,1} and {2,3} with Z2 each (identity first), edges 0 <-> 2.
RawColoredGraph two_pairs_graph();

/// A random instance with 1..max_classes classes of size 1..max_size, mixed
/// abelian groups, random inter- and intra-class edges.
RawColoredGraph random_instance(std::uint64_t seed, std::size_t max_classes, std::size_t max_size);

/// Renames points at random, reorders each class's point list and rewrites
/// the group enumerations accordingly. Class order and enumeration order are
/// kept, so the result is isomorphic to the input.
RawColoredGraph relabel(const RawColoredGraph& g, std::uint64_t seed);

}  // namespace pgc
