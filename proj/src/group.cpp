#include "pgcanon/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pgcanon/error.hpp"
#include "pgcanon/simd/kernels.hpp"

namespace pgc {

std::string to_decimal(const BigCard& value) { return value.str(); }

BigCard from_decimal(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::ParseError, "not a decimal cardinal: '" + std::string(text) + "'");
  return BigCard(std::string(text));
}

GeneratorSet::GeneratorSet(Domain d, std::vector<Permutation> g) : domain(d), gens(std::move(g)) {
  for (const auto& p : gens)
    if (p.domain() != domain)
      throw Error(ErrorCode::DomainMismatch, "generator on " + std::to_string(p.size()) +
                                                 " points in a set on " + std::to_string(domain.size));
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(Domain domain, std::span<const Point> initial_base)
    : domain_(domain) {
  std::vector<bool> used(domain.size, false);
  for (Point b : initial_base) {
    if (b >= domain.size || used[b])
      throw Error(ErrorCode::IndexOutOfRange, "initial base point " + std::to_string(b));
    used[b] = true;
    append_level(b);
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

Permutation StabilizerChain::transversal(std::size_t level, Point point) const {
  const Level& l = levels_.at(level);
  const std::int32_t s = point < l.slot.size() ? l.slot[point] : -1;
  if (s < 0) throw Error(ErrorCode::IndexOutOfRange, "point not in fundamental orbit");
  return Permutation::adopt(l.reps[static_cast<std::size_t>(s)]);
}

std::span<const Point> StabilizerChain::rep_images(std::size_t level, Point point) const {
  const Level& l = levels_.at(level);
  const std::int32_t s = point < l.slot.size() ? l.slot[point] : -1;
  if (s < 0) return {};
  return l.reps[static_cast<std::size_t>(s)];
}

std::span<const Point> StabilizerChain::rep_inverse_images(std::size_t level, Point point) const {
  const Level& l = levels_.at(level);
  const std::int32_t s = point < l.slot.size() ? l.slot[point] : -1;
  if (s < 0) return {};
  return l.reps_inv[static_cast<std::size_t>(s)];
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  out.reserve(strong_.size());
  for (const auto& g : strong_) out.push_back(Permutation::adopt(g));
  return out;
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t level) const {
  std::vector<Permutation> out;
  for (std::size_t idx : levels_.at(level).gens) out.push_back(Permutation::adopt(strong_[idx]));
  return out;
}

BigCard StabilizerChain::order() const {
  BigCard n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

StabilizerChain::SiftResult StabilizerChain::sift(std::span<const Point> images,
                                                  std::size_t from_level) const {
  if (images.size() != domain_.size)
    throw Error(ErrorCode::DomainMismatch, "sift: permutation on " + std::to_string(images.size()) +
                                               " points, chain on " + std::to_string(domain_.size));
  const auto& k = simd::active();
  SiftResult r{std::vector<Point>(images.begin(), images.end()), from_level};
  std::vector<Point> scratch(images.size());
  for (; r.level < levels_.size(); ++r.level) {
    const Level& l = levels_[r.level];
    const std::int32_t s = l.slot[r.residue[l.base]];
    if (s < 0) return r;
    if (s == 0) continue;  // representative of the base point itself is the identity
    k.compose(scratch.data(), l.reps_inv[static_cast<std::size_t>(s)].data(), r.residue.data(),
              scratch.size());
    r.residue.swap(scratch);
  }
  return r;
}

bool StabilizerChain::contains(const Permutation& s) const {
  SiftResult r = sift(s.images());
  return r.level == levels_.size() &&
         simd::active().first_moved(r.residue.data(), r.residue.size()) == r.residue.size();
}

void StabilizerChain::append_level(Point base) {
  Level l;
  l.base = base;
  l.slot.assign(domain_.size, -1);
  l.slot[base] = 0;
  l.orbit.push_back(base);
  std::vector<Point> id(domain_.size);
  simd::active().iota(id.data(), id.size());
  l.reps.push_back(id);
  l.reps_inv.push_back(std::move(id));
  l.verified.push_back(0);
  l.expanded.push_back(0);
  levels_.push_back(std::move(l));
}

void StabilizerChain::extend_orbit(std::size_t level) {
  Level& l = levels_[level];
  std::vector<std::size_t>& done = l.expanded;
  const auto& k = simd::active();
  const std::size_t n = domain_.size;
  for (std::size_t pos = 0; pos < l.orbit.size(); ++pos) {
    const Point beta = l.orbit[pos];
    for (std::size_t g = done[pos]; g < l.gens.size(); ++g) {
      const std::vector<Point>& s = strong_[l.gens[g]];
      const Point img = s[beta];
      if (l.slot[img] >= 0) continue;
      l.slot[img] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(img);
      std::vector<Point> rep(n), rep_inv(n);
      k.compose(rep.data(), s.data(), l.reps[pos].data(), n);
      k.invert(rep_inv.data(), rep.data(), n);
      l.reps.push_back(std::move(rep));
      l.reps_inv.push_back(std::move(rep_inv));
      l.verified.push_back(0);
      done.push_back(0);
    }
    done[pos] = l.gens.size();
  }
}

void StabilizerChain::add_strong(std::vector<Point> gen, std::size_t first_level,
                                 std::size_t last_level) {
  const std::size_t n = domain_.size;
  if (last_level == levels_.size()) {
    const std::size_t moved = simd::active().first_moved(gen.data(), n);
    append_level(static_cast<Point>(moved));
  }
  strong_.push_back(std::move(gen));
  const std::size_t idx = strong_.size() - 1;
  for (std::size_t l = first_level; l <= last_level; ++l) {
    levels_[l].gens.push_back(idx);
    extend_orbit(l);
  }
}

void StabilizerChain::complete_from(std::size_t start) {
  const auto& k = simd::active();
  const std::size_t n = domain_.size;
  std::vector<Point> tmp(n), h(n);
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t pos = 0; pos < levels_[li].orbit.size() && !restarted; ++pos) {
      while (levels_[li].verified[pos] < levels_[li].gens.size()) {
        Level& l = levels_[li];
        const std::size_t g = l.verified[pos]++;
        const std::vector<Point>& s = strong_[l.gens[g]];
        const Point img = s[l.orbit[pos]];
        const auto target = static_cast<std::size_t>(l.slot[img]);
        // Schreier generator u_{s(beta)}^{-1} s u_beta
        k.compose(tmp.data(), s.data(), l.reps[pos].data(), n);
        k.compose(h.data(), l.reps_inv[target].data(), tmp.data(), n);
        if (k.first_moved(h.data(), n) == n) continue;
        SiftResult r = sift(h, li + 1);
        if (r.level == levels_.size() && k.first_moved(r.residue.data(), n) == n) continue;
        const std::size_t j = r.level;
        add_strong(std::move(r.residue), li + 1, j);
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

bool StabilizerChain::add_generator(const Permutation& g) {
  SiftResult r = sift(g.images(), 0);
  const std::size_t n = domain_.size;
  if (r.level == levels_.size() && simd::active().first_moved(r.residue.data(), n) == n)
    return false;
  const std::size_t j = r.level;
  add_strong(std::move(r.residue), 0, j);
  complete_from(j);
  return true;
}

// ---------------------------------------------------------------------------

StabilizerChain build_chain(const GeneratorSet& s) {
  StabilizerChain c(s.domain);
  for (const auto& g : s.gens) {
    if (g.domain() != s.domain) throw Error(ErrorCode::DomainMismatch, "build_chain");
    if (!g.is_identity()) c.add_generator(g);
  }
  return c;
}

BigCard order(const StabilizerChain& c) { return c.order(); }

bool contains(const StabilizerChain& c, const Permutation& s) { return c.contains(s); }

bool membership_by_order(const GeneratorSet& s, const Permutation& x) {
  if (x.domain() != s.domain) throw Error(ErrorCode::DomainMismatch, "membership_by_order");
  GeneratorSet extended = s;
  extended.gens.push_back(x);
  return build_chain(s).order() == build_chain(extended).order();
}

GeneratorSet union_span(std::span<const GeneratorSet> parts) {
  if (parts.empty()) return GeneratorSet{};
  GeneratorSet out;
  out.domain = parts.front().domain;
  for (const auto& p : parts) {
    if (p.domain != out.domain) throw Error(ErrorCode::DomainMismatch, "union_span");
    out.gens.insert(out.gens.end(), p.gens.begin(), p.gens.end());
  }
  return out;
}

std::vector<Permutation> closure_bruteforce(const GeneratorSet& s, std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(s.domain.size);
  seen.insert(id);
  queue.push_back(id);
  if (seen.size() > cap) throw Error(ErrorCode::CapExceeded, "closure larger than cap");
  while (!queue.empty()) {
    const Permutation e = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : s.gens) {
      Permutation p = compose(g, e);
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw Error(ErrorCode::CapExceeded, "closure larger than cap " + std::to_string(cap));
        queue.push_back(std::move(p));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pgc
