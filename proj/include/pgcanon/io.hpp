#pragma once

// JSON file formats. Every parser throws ParseError on malformed text or
// shape, and serializers emit compact JSON with keys in sorted order, so equal
// values always serialize to identical bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "pgcanon/canon.hpp"
#include "pgcanon/generators.hpp"
#include "pgcanon/group.hpp"

namespace pgc {

struct GroupFile {
  std::size_t n = 0;
  std::vector<std::vector<Point>> generators;

  friend bool operator==(const GroupFile&, const GroupFile&) = default;
};

struct MatrixFile {
  std::uint32_t modulus = 2;
  std::vector<std::vector<std::int64_t>> rows;

  friend bool operator==(const MatrixFile&, const MatrixFile&) = default;
};

GroupFile parse_group_file(const std::string& text);
std::string serialize(const GroupFile& f);
/// Throws LengthMismatch when a generator has the wrong length and
/// NotABijection when it is not a permutation.
GeneratorSet to_generator_set(const GroupFile& f);

MatrixFile parse_matrix_file(const std::string& text);
std::string serialize(const MatrixFile& f);

/// {"n", "classes", "edges", "undirected", "phi"}. With "undirected": true every
/// listed edge is added in both orientations.
RawColoredGraph parse_colored_graph(const std::string& text);
/// Writes the edges as stored, with "undirected": false.
std::string serialize(const RawColoredGraph& g);

/// Same, with the base graph and twist recorded under "base" and "twisted"
/// (ignored by the parser).
std::string serialize(const RawColoredGraph& g, const BaseGraph& base, bool twisted,
                      std::size_t twist_edge);

/// {"n", "class_sizes", "edges", "phi"}.
CanonicalForm parse_canonical_form(const std::string& text);
std::string serialize(const CanonicalForm& f);

/// An image sequence, either as a JSON array or comma separated.
std::vector<Point> parse_image_sequence(const std::string& text);

/// Whole file contents. Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace pgc
