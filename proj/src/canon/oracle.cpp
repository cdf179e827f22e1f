// Brute-force references for canonize: enumerate every anchor tuple.

#include <algorithm>
#include <map>

#include "pgcanon/canon.hpp"
#include "pgcanon/error.hpp"

namespace pgc {

namespace {

std::size_t tuple_count(const AbelianColoredGraph& g, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    total *= g.class_size(i);
    if (total > cap)
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " anchor tuples");
  }
  return total;
}

std::vector<Point> anchors_of(const AbelianColoredGraph& g, std::size_t index) {
  std::vector<Point> anchors(g.class_count());
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    anchors[i] = g.point(i, static_cast<std::uint32_t>(index % g.class_size(i)));
    index /= g.class_size(i);
  }
  return anchors;
}

// Characteristic vector of block (i, j) over the pairs of its two numeric
// blocks, both orientations, in increasing pair order. Since class i's labels
// precede class j's, pairs starting in block i come first.
std::vector<char> block_bits(const AbelianColoredGraph& g, const std::vector<Edge>& edges,
                             const Labeling& l, std::size_t i, std::size_t j) {
  const std::size_t oi = g.group(i).offset, oj = g.group(j).offset;
  const std::size_t ki = g.class_size(i), kj = g.class_size(j);
  std::vector<char> bits(2 * ki * kj, 0);
  for (const auto& [u, v] : edges) {
    const std::size_t x = l.value[u], y = l.value[v];
    const std::size_t pos = x < oj ? (x - oi) * kj + (y - oj) : ki * kj + (x - oj) * ki + (y - oi);
    bits[pos] = 1;
  }
  return bits;
}

// Negative when a sorts first: at the first difference, a set bit wins.
int compare_bits(const std::vector<char>& a, const std::vector<char>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] ? -1 : 1;
  return 0;
}

}  // namespace

CanonicalForm canon_oracle(const AbelianColoredGraph& input, std::size_t cap) {
  const AbelianColoredGraph g = refine_intra(input);
  const std::size_t total = tuple_count(g, cap);
  const std::size_t m = g.class_count();
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::vector<Edge>> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      order.emplace_back(i, j);
      edges.push_back(g.block_edges(i, j));
    }

  std::vector<std::vector<char>> best;
  std::size_t best_index = 0;
  for (std::size_t index = 0; index < total; ++index) {
    const Labeling l = anchored_labeling(g, anchors_of(g, index));
    std::vector<std::vector<char>> cur;
    int verdict = best.empty() ? -1 : 0;
    for (std::size_t b = 0; b < order.size(); ++b) {
      cur.push_back(block_bits(g, edges[b], l, order[b].first, order[b].second));
      if (verdict == 0) verdict = compare_bits(cur.back(), best[b]);
      if (verdict > 0) break;
    }
    if (verdict < 0) {
      best = std::move(cur);
      best_index = index;
    }
  }

  const std::vector<Point> anchors = anchors_of(g, best_index);
  const Labeling l = anchored_labeling(g, anchors);
  CanonicalForm f;
  f.n = g.n();
  for (const auto& [u, v] : g.edges()) f.edges.emplace_back(l.value[u], l.value[v]);
  std::sort(f.edges.begin(), f.edges.end());
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = g.class_size(i), off = g.group(i).offset;
    f.class_sizes.push_back(k);
    // Conjugate each enumerated element by the labeling.
    std::vector<Point> unlabel(k);
    for (std::uint32_t x = 0; x < k; ++x) unlabel[l.value[g.point(i, x)] - off] = g.point(i, x);
    std::vector<std::vector<Point>> rows;
    for (const auto& element : g.raw().phi[i]) {
      std::vector<Point> row(k);
      for (std::uint32_t label = 0; label < k; ++label) {
        const Point p = unlabel[label];
        row[label] = static_cast<Point>(l.value[g.point(i, element[g.local_of(p)])] - off);
      }
      rows.push_back(std::move(row));
    }
    f.phi.push_back(std::move(rows));
  }
  return f;
}

std::vector<Point> witness(const CanonResult& r, std::size_t cap) {
  const AbelianColoredGraph& g = *r.state.graph;
  tuple_count(g, cap);
  const std::size_t m = g.class_count();
  std::map<std::pair<std::size_t, std::size_t>, const PairSet*> emitted;
  for (std::size_t b = 0; b < r.state.processed.size(); ++b)
    emitted[r.state.processed[b]] = &r.state.blocks[b];

  std::vector<Point> anchors(m);
  // Depth-first over classes; a prefix survives while every block inside it matches.
  const auto prefix_ok = [&](std::size_t c) {
    const Labeling lc = local_labeling(g, c, anchors[c]).table;
    if (encode_relative(g.intra_edges(c), lc) != r.intra_blocks[c]) return false;
    for (std::size_t i = 0; i < c; ++i) {
      const auto enc = encode_relative(g.block_edges(i, c), join_labelings(local_labeling(g, i, anchors[i]),
                                                                  local_labeling(g, c, anchors[c])));
      if (enc != *emitted.at({i, c})) return false;
    }
    return true;
  };
  std::vector<std::uint32_t> choice(m, 0);
  std::size_t c = 0;
  while (true) {
    if (c == m) {
      if (evaluate(r.state.coset.morphism, labeling_element(g, anchors)) == r.state.coset.value)
        return anchors;
      c = m - 1;
      ++choice[c];
    }
    if (choice[c] == g.class_size(c)) {
      if (c == 0) break;
      choice[c] = 0;
      --c;
      ++choice[c];
      continue;
    }
    anchors[c] = g.point(c, choice[c]);
    if (prefix_ok(c)) {
      ++c;
      if (c < m) choice[c] = 0;
    } else {
      ++choice[c];
    }
  }
  throw Error(ErrorCode::InvariantViolation, "no labeling reproduces the canonical form");
}

}  // namespace pgc
