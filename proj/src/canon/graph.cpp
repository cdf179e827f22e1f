#include <algorithm>
#include <map>

#include "pgcanon/canon.hpp"
#include "pgcanon/error.hpp"

namespace pgc {

namespace {

[[noreturn]] void fail(ErrorCode code, std::size_t i, const std::string& what) {
  throw Error(code, "class " + std::to_string(i) + ": " + what);
}

ClassGroup build_group(std::size_t i, const std::vector<std::vector<Point>>& entries,
                       std::size_t k) {
  if (entries.size() != k)
    fail(ErrorCode::WrongEnumerationLength, i,
         std::to_string(entries.size()) + " group elements listed for " + std::to_string(k) +
             " points");
  ClassGroup grp;
  grp.size = k;
  std::map<std::vector<Point>, std::uint32_t> index;
  for (std::size_t mu = 0; mu < k; ++mu) {
    const auto& e = entries[mu];
    if (e.size() != k)
      fail(ErrorCode::WrongEnumerationLength, i, "element " + std::to_string(mu) + " has length " +
                                                     std::to_string(e.size()));
    std::vector<bool> seen(k, false);
    for (Point y : e) {
      if (y >= k || seen[y]) fail(ErrorCode::NotABijection, i, "element " + std::to_string(mu));
      seen[y] = true;
    }
    if (!index.emplace(e, static_cast<std::uint32_t>(mu)).second)
      fail(ErrorCode::WrongEnumerationLength, i, "element " + std::to_string(mu) + " is repeated");
    grp.act.insert(grp.act.end(), e.begin(), e.end());
  }
  // A finite set closed under composition is a group.
  grp.mul.resize(k * k);
  std::vector<Point> product(k);
  for (std::size_t mu = 0; mu < k; ++mu)
    for (std::size_t nu = 0; nu < k; ++nu) {
      for (std::size_t x = 0; x < k; ++x) product[x] = entries[mu][entries[nu][x]];
      const auto it = index.find(product);
      if (it == index.end())
        fail(ErrorCode::NotAGroup, i, "not closed under composition");
      grp.mul[mu * k + nu] = it->second;
    }
  for (std::size_t mu = 0; mu < k; ++mu)
    for (std::size_t nu = 0; nu < mu; ++nu)
      if (grp.mul[mu * k + nu] != grp.mul[nu * k + mu])
        fail(ErrorCode::NotAbelian, i,
             "elements " + std::to_string(nu) + " and " + std::to_string(mu) + " do not commute");
  std::vector<bool> reached(k, false);
  for (std::size_t mu = 0; mu < k; ++mu) reached[entries[mu][0]] = true;
  if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
    fail(ErrorCode::NotTransitive, i, "group is not transitive on the class");
  grp.inv.resize(k);
  // Identity is the element fixing point 0; regularity makes it unique.
  std::uint32_t identity = 0;
  for (std::size_t mu = 0; mu < k; ++mu)
    if (entries[mu][0] == 0) identity = static_cast<std::uint32_t>(mu);
  for (std::size_t mu = 0; mu < k; ++mu)
    for (std::size_t nu = 0; nu < k; ++nu)
      if (grp.mul[mu * k + nu] == identity) grp.inv[mu] = static_cast<std::uint32_t>(nu);
  grp.shift.assign(k * k, kUnlabeled);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t mu = 0; mu < k; ++mu) {
      auto& slot = grp.shift[a * k + entries[mu][a]];
      if (slot != kUnlabeled)
        fail(ErrorCode::InvariantViolation, i, "transitive abelian group is not regular");
      slot = static_cast<std::uint32_t>(mu);
    }
  return grp;
}

}  // namespace

AbelianColoredGraph validate(const RawColoredGraph& raw) {
  AbelianColoredGraph g;
  g.raw_ = raw;
  const std::size_t n = raw.n;
  g.class_of_.assign(n, static_cast<std::size_t>(-1));
  g.local_of_.assign(n, 0);
  for (std::size_t i = 0; i < raw.classes.size(); ++i) {
    if (raw.classes[i].empty()) fail(ErrorCode::UncoveredPoint, i, "class is empty");
    for (std::size_t x = 0; x < raw.classes[i].size(); ++x) {
      const Point p = raw.classes[i][x];
      if (p >= n) fail(ErrorCode::IndexOutOfRange, i, "point " + std::to_string(p) + " out of range");
      if (g.class_of_[p] != static_cast<std::size_t>(-1))
        fail(ErrorCode::OverlappingClasses, i, "point " + std::to_string(p) + " in two classes");
      g.class_of_[p] = i;
      g.local_of_[p] = static_cast<std::uint32_t>(x);
    }
  }
  for (Point p = 0; p < n; ++p)
    if (g.class_of_[p] == static_cast<std::size_t>(-1))
      throw Error(ErrorCode::UncoveredPoint, "point " + std::to_string(p) + " is in no class");
  if (raw.phi.size() != raw.classes.size())
    throw Error(ErrorCode::WrongEnumerationLength,
                std::to_string(raw.phi.size()) + " group enumerations for " +
                    std::to_string(raw.classes.size()) + " classes");
  std::size_t offset = 0;
  for (std::size_t i = 0; i < raw.classes.size(); ++i) {
    g.groups_.push_back(build_group(i, raw.phi[i], raw.classes[i].size()));
    g.groups_.back().offset = offset;
    offset += raw.classes[i].size();
  }
  for (const auto& [u, v] : raw.edges)
    if (u >= n || v >= n)
      throw Error(ErrorCode::EdgeOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
  auto& edges = g.raw_.edges;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return g;
}

std::vector<Edge> AbelianColoredGraph::intra_edges(std::size_t i) const {
  std::vector<Edge> out;
  for (const auto& e : raw_.edges)
    if (class_of_[e.first] == i && class_of_[e.second] == i) out.push_back(e);
  return out;
}

std::vector<Edge> AbelianColoredGraph::block_edges(std::size_t i, std::size_t j) const {
  std::vector<Edge> out;
  for (const auto& e : raw_.edges) {
    const std::size_t cu = class_of_[e.first], cv = class_of_[e.second];
    if ((cu == i && cv == j) || (cu == j && cv == i)) out.push_back(e);
  }
  return out;
}

LocalLabeling local_labeling(const AbelianColoredGraph& g, std::size_t i, Point anchor) {
  if (i >= g.class_count() || anchor >= g.n() || g.class_of(anchor) != i)
    throw Error(ErrorCode::WrongClass,
                "point " + std::to_string(anchor) + " is not in class " + std::to_string(i));
  const ClassGroup& grp = g.group(i);
  LocalLabeling l{i, anchor, Labeling{std::vector<std::uint32_t>(g.n(), kUnlabeled)}};
  const std::uint32_t a = g.local_of(anchor);
  for (std::uint32_t b = 0; b < grp.size; ++b)
    l.table.value[g.point(i, b)] = static_cast<std::uint32_t>(grp.offset + grp.taking(a, b));
  return l;
}

Labeling join_labelings(const Labeling& a, const Labeling& b) {
  Labeling out{a.value};
  if (out.value.size() < b.value.size()) out.value.resize(b.value.size(), kUnlabeled);
  for (std::size_t p = 0; p < b.value.size(); ++p) {
    if (b.value[p] == kUnlabeled) continue;
    if (out.value[p] != kUnlabeled)
      throw Error(ErrorCode::OverlappingClasses, "point " + std::to_string(p) + " labeled twice");
    out.value[p] = b.value[p];
  }
  return out;
}

Labeling join_labelings(const LocalLabeling& a, const LocalLabeling& b) {
  if (a.class_index == b.class_index)
    throw Error(ErrorCode::OverlappingClasses,
                "both labelings are on class " + std::to_string(a.class_index));
  return join_labelings(a.table, b.table);
}

PairSet encode_relative(const std::vector<Edge>& pairs, const Labeling& l) {
  PairSet out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (!l.defined(u) || !l.defined(v))
      throw Error(ErrorCode::UncoveredPoint, "edge (" + std::to_string(u) + ", " +
                                                 std::to_string(v) + ") not covered by labeling");
    out.emplace_back(l.value[u], l.value[v]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int compare_blocks(const PairSet& a, const PairSet& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < common; ++k) {
    // The smaller pair is in one set and not the other: its owner sorts first.
    if (a[k] < b[k]) return -1;
    if (b[k] < a[k]) return 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? -1 : 1;
}

Labeling anchored_labeling(const AbelianColoredGraph& g, const std::vector<Point>& anchors) {
  if (anchors.size() != g.class_count())
    throw Error(ErrorCode::LengthMismatch, "one anchor per class expected");
  Labeling l{std::vector<std::uint32_t>(g.n(), kUnlabeled)};
  for (std::size_t i = 0; i < anchors.size(); ++i) l = join_labelings(l, local_labeling(g, i, anchors[i]).table);
  return l;
}

}  // namespace pgc
