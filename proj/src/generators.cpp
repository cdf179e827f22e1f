#include "pgcanon/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "pgcanon/error.hpp"

namespace pgc {

namespace {

using Rng = std::mt19937_64;

// Factorizations of k into cyclic orders, each a divisor chain candidate.
// Any factorization gives an abelian group of order k; duplicates up to
// isomorphism are harmless here.
std::vector<std::vector<std::size_t>> factorizations(std::size_t k, std::size_t min_factor = 2) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 1) return {{}};
  for (std::size_t f = min_factor; f <= k; ++f) {
    if (k % f != 0) continue;
    for (auto rest : factorizations(k / f, f)) {
      rest.insert(rest.begin(), f);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

// Regular representation of Z_{f0} x Z_{f1} x ... on its own elements,
// elements indexed in mixed radix.
std::vector<std::vector<Point>> regular_abelian(const std::vector<std::size_t>& factors) {
  std::size_t k = 1;
  for (std::size_t f : factors) k *= f;
  std::vector<std::vector<Point>> elements(k, std::vector<Point>(k));
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t x = 0; x < k; ++x) {
      std::size_t a = g, b = x, sum = 0, scale = 1;
      for (std::size_t f : factors) {
        sum += ((a % f + b % f) % f) * scale;
        a /= f;
        b /= f;
        scale *= f;
      }
      elements[g][x] = static_cast<Point>(sum);
    }
  return elements;
}

std::vector<std::vector<Point>> cyclic_enumeration(std::size_t k) { return regular_abelian({k}); }

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

}  // namespace

RawColoredGraph gen_cyclic(const CyclicParams& params, std::uint64_t seed) {
  Rng rng(seed);
  RawColoredGraph g;
  for (std::size_t k : params.class_sizes) {
    if (k == 0) throw Error(ErrorCode::ParseError, "class sizes must be positive");
    std::vector<Point> cls(k);
    std::iota(cls.begin(), cls.end(), static_cast<Point>(g.n));
    g.n += k;
    std::vector<std::vector<Point>> phi = cyclic_enumeration(k);
    if (params.mixed) {
      const auto options = factorizations(k);
      phi = regular_abelian(options[rng() % options.size()]);
      std::shuffle(phi.begin(), phi.end(), rng);
    }
    g.classes.push_back(std::move(cls));
    g.phi.push_back(std::move(phi));
  }
  const auto add = [&](Point u, Point v) {
    g.edges.emplace_back(u, v);
    if (params.undirected) g.edges.emplace_back(v, u);
  };
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    const auto& ci = g.classes[i];
    if (params.cycle && ci.size() > 1)
      for (std::size_t x = 0; x < ci.size(); ++x) g.edges.emplace_back(ci[x], ci[(x + 1) % ci.size()]);
    for (Point u : ci)
      for (Point v : ci)
        if (u != v && params.intra_density > 0 && coin(rng, params.intra_density)) add(u, v);
    for (std::size_t j = i + 1; j < g.classes.size(); ++j)
      for (Point u : ci)
        for (Point v : g.classes[j]) {
          if (coin(rng, params.density)) add(u, v);
          if (!params.undirected && coin(rng, params.density)) add(v, u);
        }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return params.mixed ? relabel(g, seed ^ 0x9e3779b97f4a7c15ULL) : g;
}

RawColoredGraph gen_bipartite(std::size_t left, std::size_t right, double density,
                              std::uint64_t seed) {
  CyclicParams p;
  p.class_sizes = {left, right};
  p.density = density;
  p.undirected = true;
  return gen_cyclic(p, seed);
}

BaseGraph base_graph(std::string_view name) {
  BaseGraph b;
  b.name = std::string(name);
  if (name == "triangle") {
    b.vertices = 3;
    b.edges = {{0, 1}, {1, 2}, {0, 2}};
  } else if (name == "square") {
    b.vertices = 4;
    b.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  } else if (name == "k4") {
    b.vertices = 4;
    b.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  } else if (name == "prism") {
    b.vertices = 6;
    b.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  } else if (name == "k33") {
    b.vertices = 6;
    for (std::uint32_t u = 0; u < 3; ++u)
      for (std::uint32_t v = 3; v < 6; ++v) b.edges.emplace_back(u, v);
  } else if (name == "cube") {
    b.vertices = 8;
    for (std::uint32_t u = 0; u < 8; ++u)
      for (std::uint32_t bit = 1; bit < 8; bit <<= 1)
        if ((u & bit) == 0) b.edges.emplace_back(u, u | bit);
  } else {
    throw Error(ErrorCode::ParseError, "unknown base graph '" + std::string(name) + "'");
  }
  return b;
}

std::vector<std::string> base_graph_names() {
  return {"triangle", "square", "k4", "prism", "k33", "cube"};
}

RawColoredGraph gen_cfi(const BaseGraph& base, bool twisted, std::size_t twist_edge) {
  if (twist_edge >= base.edges.size())
    throw Error(ErrorCode::IndexOutOfRange, "twist edge out of range");
  std::vector<std::vector<std::size_t>> incident(base.vertices);
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    incident[base.edges[e].first].push_back(e);
    incident[base.edges[e].second].push_back(e);
  }
  RawColoredGraph g;
  // Vertex gadgets: points are the even subsets of incident edges, as masks.
  std::vector<std::vector<std::uint32_t>> masks(base.vertices);
  std::vector<std::vector<Point>> middle(base.vertices);
  for (std::size_t v = 0; v < base.vertices; ++v) {
    const std::size_t d = incident[v].size();
    for (std::uint32_t s = 0; s < (1u << d); ++s)
      if (std::popcount(s) % 2 == 0) masks[v].push_back(s);
    std::vector<Point> cls;
    for (std::size_t x = 0; x < masks[v].size(); ++x) cls.push_back(static_cast<Point>(g.n++));
    std::vector<std::vector<Point>> phi;
    for (std::uint32_t t : masks[v]) {
      std::vector<Point> row;
      for (std::uint32_t s : masks[v]) {
        const auto it = std::find(masks[v].begin(), masks[v].end(), s ^ t);
        row.push_back(static_cast<Point>(it - masks[v].begin()));
      }
      phi.push_back(std::move(row));
    }
    middle[v] = cls;
    g.classes.push_back(std::move(cls));
    g.phi.push_back(std::move(phi));
  }
  // Edge-end pairs a^0, a^1 for every (vertex, incident edge).
  std::vector<std::vector<std::pair<Point, Point>>> ends(base.vertices);
  for (std::size_t v = 0; v < base.vertices; ++v)
    for (std::size_t k = 0; k < incident[v].size(); ++k) {
      const Point a0 = static_cast<Point>(g.n++), a1 = static_cast<Point>(g.n++);
      ends[v].emplace_back(a0, a1);
      g.classes.push_back({a0, a1});
      g.phi.push_back({{0, 1}, {1, 0}});
    }
  const auto link = [&g](Point u, Point v) {
    g.edges.emplace_back(u, v);
    g.edges.emplace_back(v, u);
  };
  for (std::size_t v = 0; v < base.vertices; ++v)
    for (std::size_t x = 0; x < masks[v].size(); ++x)
      for (std::size_t k = 0; k < incident[v].size(); ++k) {
        const bool in = (masks[v][x] >> k) & 1u;
        link(middle[v][x], in ? ends[v][k].second : ends[v][k].first);
      }
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    const auto [v, w] = base.edges[e];
    const auto kv = std::find(incident[v].begin(), incident[v].end(), e) - incident[v].begin();
    const auto kw = std::find(incident[w].begin(), incident[w].end(), e) - incident[w].begin();
    const auto [v0, v1] = ends[v][kv];
    const auto [w0, w1] = ends[w][kw];
    if (twisted && e == twist_edge) {
      link(v0, w1);
      link(v1, w0);
    } else {
      link(v0, w0);
      link(v1, w1);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

RawColoredGraph four_cycle_graph() {
  CyclicParams p;
  p.class_sizes = {4};
  p.cycle = true;
  return gen_cyclic(p, 0);
}

RawColoredGraph two_pairs_graph() {
  RawColoredGraph g;
  g.n = 4;
  g.classes = {{0, 1}, {2, 3}};
  g.phi = {{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}};
  g.edges = {{0, 2}, {2, 0}};
  return g;
}

RawColoredGraph random_instance(std::uint64_t seed, std::size_t max_classes, std::size_t max_size) {
  Rng rng(seed);
  CyclicParams p;
  const std::size_t m = 1 + rng() % max_classes;
  for (std::size_t i = 0; i < m; ++i) p.class_sizes.push_back(1 + rng() % max_size);
  p.density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
  p.intra_density = (rng() % 3 == 0) ? 0.3 : 0.0;
  p.undirected = rng() % 2 == 0;
  p.mixed = true;
  return gen_cyclic(p, rng());
}

RawColoredGraph relabel(const RawColoredGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> rename(g.n);
  std::iota(rename.begin(), rename.end(), 0);
  std::shuffle(rename.begin(), rename.end(), rng);
  RawColoredGraph out;
  out.n = g.n;
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    const std::size_t k = g.classes[i].size();
    // order[new local] = old local
    std::vector<std::uint32_t> order(k), position(k);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint32_t y = 0; y < k; ++y) position[order[y]] = y;
    std::vector<Point> cls(k);
    for (std::uint32_t y = 0; y < k; ++y) cls[y] = rename[g.classes[i][order[y]]];
    std::vector<std::vector<Point>> phi;
    for (const auto& element : g.phi[i]) {
      std::vector<Point> row(k);
      for (std::uint32_t y = 0; y < k; ++y) row[y] = position[element[order[y]]];
      phi.push_back(std::move(row));
    }
    out.classes.push_back(std::move(cls));
    out.phi.push_back(std::move(phi));
  }
  for (const auto& [u, v] : g.edges) out.edges.emplace_back(rename[u], rename[v]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace pgc
