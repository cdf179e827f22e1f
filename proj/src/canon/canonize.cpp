#include <algorithm>
#include <map>
#include <unordered_map>

#include "pgcanon/canon.hpp"
#include "pgcanon/error.hpp"

namespace pgc {

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::InvariantViolation, what);
}

std::vector<Edge> all_pairs(const AbelianColoredGraph& g, std::size_t i, std::size_t j) {
  std::vector<Edge> out;
  for (Point a : g.raw().classes[i])
    for (Point b : g.raw().classes[j]) out.emplace_back(a, b);
  return out;
}

PairSet block_encoding(const AbelianColoredGraph& g, const std::vector<Edge>& edges, std::size_t i,
                       std::size_t j, Point a, Point b) {
  return encode_relative(edges, join_labelings(local_labeling(g, i, a), local_labeling(g, j, b)));
}

// Candidates sharing a block value are decided once.
std::vector<Edge> compatible_with(const CanonState& st, std::size_t i, std::size_t j,
                                  const BlockCosets& bc, const PermMorphism& bm,
                                  const MorphismSplit* split, const CanonOptions& opt) {
  const AbelianColoredGraph& g = *st.graph;
  std::unordered_map<Permutation, bool, PermutationHash> decided;
  const Permutation base_inv = split ? inverse(evaluate(bm, st.offset)) : Permutation{};
  std::vector<Edge> out;
  for (const auto& [a, b] : all_pairs(g, i, j)) {
    Permutation v = block_value(g, bc, a, b);
    auto it = decided.find(v);
    if (it == decided.end()) {
      bool ok;
      if (opt.reference_emptiness || split == nullptr) {
        const MorphismCoset constraint{st.group, bm, v};
        ok = !coset_is_empty(coset_intersect(st.coset, constraint));
      } else {
        ok = split->image_contains(compose(base_inv, v));
      }
      it = decided.emplace(std::move(v), ok).first;
    }
    if (it->second) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

CanonState initial_state(std::shared_ptr<const AbelianColoredGraph> g) {
  CanonState st;
  st.graph = g;
  st.group = labeling_group_generators(*g);
  const PermMorphism init = init_morphism(*g);
  st.coset = MorphismCoset{st.group, init, init_value(*g)};
  const MorphismSplit split(init, st.group);
  auto offset = split.preimage(st.coset.value);
  if (!offset) violated("initial labeling coset is empty");
  st.offset = std::move(*offset);
  st.kernel = split.kernel_generators();
  return st;
}

std::vector<Edge> compatible_pairs(const CanonState& st, std::size_t i, std::size_t j,
                                   const CanonOptions& opt) {
  const auto bc = std::make_shared<const BlockCosets>(block_cosets(*st.graph, i, j));
  const PermMorphism bm = block_morphism(*st.graph, bc);
  if (opt.reference_emptiness) return compatible_with(st, i, j, *bc, bm, nullptr, opt);
  const MorphismSplit split(bm, st.kernel);
  return compatible_with(st, i, j, *bc, bm, &split, opt);
}

MinPairs min_pairs(const CanonState& st, std::size_t i, std::size_t j, const CanonOptions& opt) {
  const AbelianColoredGraph& g = *st.graph;
  MinPairs mp;
  mp.cosets = std::make_shared<const BlockCosets>(block_cosets(g, i, j));
  const PermMorphism bm = block_morphism(g, mp.cosets);
  if (!opt.reference_emptiness) mp.split = std::make_shared<const MorphismSplit>(bm, st.kernel);
  const auto compatible = compatible_with(st, i, j, *mp.cosets, bm, mp.split.get(), opt);
  if (compatible.empty())
    throw Error(ErrorCode::EmptyCompatibleSet,
                "no labeling is compatible with block (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
  const std::vector<Edge> edges = g.block_edges(i, j);
  bool first = true;
  for (const auto& [a, b] : compatible) {
    PairSet enc = block_encoding(g, edges, i, j, a, b);
    int c = first ? -1 : compare_blocks(enc, mp.block);
    if (opt.corrupt_order && !first) c = -c;
    if (c < 0) {
      mp.block = std::move(enc);
      mp.pairs.clear();
    }
    if (c <= 0) mp.pairs.emplace_back(a, b);
    first = false;
  }
  mp.value = block_value(g, *mp.cosets, mp.pairs.front().first, mp.pairs.front().second);
  for (const auto& [a, b] : mp.pairs)
    if (block_value(g, *mp.cosets, a, b) != mp.value) violated("winning pairs disagree on the block value");
  return mp;
}

void apply_block(CanonState& st, std::size_t i, std::size_t j, const MinPairs& mp) {
  st.processed.emplace_back(i, j);
  st.blocks.push_back(mp.block);
  if (mp.cosets->size() == 1) return;  // every labeling encodes this block alike
  const PermMorphism bm = block_morphism(*st.graph, mp.cosets);
  const PermMorphism parts[] = {st.coset.morphism, bm};
  const Permutation values[] = {st.coset.value, mp.value};
  st.coset.morphism = tensor(parts);
  st.coset.value = block_sum(values);

  const auto split = mp.split ? mp.split : std::make_shared<const MorphismSplit>(bm, st.kernel);
  const Permutation w = compose(inverse(evaluate(bm, st.offset)), mp.value);
  const auto step = split->preimage(w);
  if (!step) violated("block value is not reachable from the labeling coset");
  st.offset = compose(st.offset, *step);
  st.kernel = split->kernel_generators();
  if (evaluate(bm, st.offset) != mp.value) violated("coset offset misses the block value");
}

AbelianColoredGraph refine_intra(const AbelianColoredGraph& input) {
  AbelianColoredGraph g = input;
  for (;;) {
    RawColoredGraph next;
    next.n = g.n();
    next.edges = g.edges();
    bool split_any = false;
    for (std::size_t i = 0; i < g.class_count(); ++i) {
      const ClassGroup& grp = g.group(i);
      const std::size_t k = grp.size;
      const auto& pts = g.raw().classes[i];
      const std::vector<Edge> intra = g.intra_edges(i);
      std::map<PairSet, std::vector<std::uint32_t>, bool (*)(const PairSet&, const PairSet&)> parts(
          [](const PairSet& a, const PairSet& b) { return compare_blocks(a, b) < 0; });
      for (std::uint32_t a = 0; a < k; ++a)
        parts[encode_relative(intra, local_labeling(g, i, pts[a]).table)].push_back(a);
      if (parts.size() == 1) {
        next.classes.push_back(pts);
        next.phi.push_back(g.raw().phi[i]);
        continue;
      }
      split_any = true;
      // Elements of the class group preserving the intra edges, in enumeration order.
      std::vector<std::uint32_t> stab;
      for (std::uint32_t mu = 0; mu < k; ++mu) {
        const bool keeps = std::all_of(intra.begin(), intra.end(), [&](const Edge& e) {
          const Edge img{pts[grp.apply(mu, g.local_of(e.first))], pts[grp.apply(mu, g.local_of(e.second))]};
          return std::binary_search(intra.begin(), intra.end(), img);
        });
        if (keeps) stab.push_back(mu);
      }
      for (const auto& [enc, anchors] : parts) {
        if (anchors.size() != stab.size())
          throw Error(ErrorCode::RefinementBrokeTransitivity,
                      "class " + std::to_string(i) + " part of size " + std::to_string(anchors.size()) +
                          " under an edge stabilizer of order " + std::to_string(stab.size()));
        std::vector<std::uint32_t> position(k, kUnlabeled);
        std::vector<Point> cls;
        for (std::uint32_t idx = 0; idx < anchors.size(); ++idx) {
          position[anchors[idx]] = idx;
          cls.push_back(pts[anchors[idx]]);
        }
        std::vector<std::vector<Point>> enumeration;
        for (std::uint32_t mu : stab) {
          std::vector<Point> row;
          for (std::uint32_t a : anchors) {
            const std::uint32_t img = position[grp.apply(mu, a)];
            if (img == kUnlabeled)
              throw Error(ErrorCode::RefinementBrokeTransitivity,
                          "edge stabilizer does not preserve a part of class " + std::to_string(i));
            row.push_back(img);
          }
          enumeration.push_back(std::move(row));
        }
        next.classes.push_back(std::move(cls));
        next.phi.push_back(std::move(enumeration));
      }
    }
    if (!split_any) return g;
    g = validate(next);
  }
}

CanonResult canonize_detailed(const AbelianColoredGraph& input, const CanonOptions& opt) {
  auto g = std::make_shared<const AbelianColoredGraph>(refine_intra(input));
  CanonResult r;
  r.state = initial_state(g);
  CanonState& st = r.state;
  const std::size_t m = g->class_count();

  for (std::size_t i = 0; i < m; ++i) {
    const auto intra = g->intra_edges(i);
    const auto& pts = g->raw().classes[i];
    PairSet enc = encode_relative(intra, local_labeling(*g, i, pts.front()).table);
    for (Point a : pts)
      if (encode_relative(intra, local_labeling(*g, i, a).table) != enc)
        violated("refined class " + std::to_string(i) + " still distinguishes anchors");
    r.intra_blocks.push_back(std::move(enc));
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto bc = std::make_shared<const BlockCosets>(block_cosets(*g, i, j));
      if (bc->size() == 1) {
        // Empty or complete block: the encoding does not depend on the labeling.
        MinPairs mp;
        mp.cosets = bc;
        mp.pairs = all_pairs(*g, i, j);
        mp.block = block_encoding(*g, g->block_edges(i, j), i, j, mp.pairs[0].first, mp.pairs[0].second);
        mp.value = Permutation::identity(g->class_size(i) * g->class_size(j));
        apply_block(st, i, j, mp);
        continue;
      }
      apply_block(st, i, j, min_pairs(st, i, j, opt));
    }
  if (evaluate(st.coset.morphism, st.offset) != st.coset.value)
    violated("final coset offset does not satisfy the accumulated constraints");

  CanonicalForm& f = r.form;
  f.n = g->n();
  for (std::size_t i = 0; i < m; ++i) f.class_sizes.push_back(g->class_size(i));
  for (const auto& b : r.intra_blocks) f.edges.insert(f.edges.end(), b.begin(), b.end());
  for (const auto& b : st.blocks) f.edges.insert(f.edges.end(), b.begin(), b.end());
  std::sort(f.edges.begin(), f.edges.end());
  if (f.edges.size() != g->edges().size()) violated("canonical edge count differs from the input");
  for (std::size_t i = 0; i < m; ++i) {
    const ClassGroup& grp = g->group(i);
    const std::size_t k = grp.size;
    std::vector<std::vector<Point>> rows(k, std::vector<Point>(k));
    for (std::uint32_t mu = 0; mu < k; ++mu)
      for (std::uint32_t nu = 0; nu < k; ++nu) rows[mu][nu] = grp.times(mu, nu);
    // The encoding through every anchor must coincide.
    for (std::uint32_t a = 0; a < k; ++a)
      for (std::uint32_t mu = 0; mu < k; ++mu)
        for (std::uint32_t nu = 0; nu < k; ++nu)
          if (grp.taking(a, grp.apply(mu, grp.apply(nu, a))) != rows[mu][nu])
            violated("group encoding depends on the anchor");
    f.phi.push_back(std::move(rows));
  }
  return r;
}

CanonicalForm canonize(const AbelianColoredGraph& g, const CanonOptions& opt) {
  return canonize_detailed(g, opt).form;
}

}  // namespace pgc
