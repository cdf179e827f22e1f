#include <algorithm>

#include "pgcanon/canon.hpp"
#include "pgcanon/error.hpp"
#include "pgcanon/simd/kernels.hpp"

namespace pgc {

namespace {

std::vector<Point> iota_table(std::size_t n) {
  std::vector<Point> t(n);
  simd::active().iota(t.data(), n);
  return t;
}

// Enumeration index of the element lambda carries on layer b of class i.
std::uint32_t layer_element(const ClassGroup& grp, std::size_t layer_base,
                            std::span<const Point> lambda, std::uint32_t b) {
  const std::size_t k = grp.size;
  const std::size_t start = layer_base + b * k;
  const Point y0 = lambda[start];
  if (y0 < start || y0 >= start + k)
    throw Error(ErrorCode::NotBlockDiagonal, "element moves a layer");
  const std::uint32_t mu = grp.taking(0, static_cast<std::uint32_t>(y0 - start));
  for (std::uint32_t x = 1; x < k; ++x)
    if (lambda[start + x] != start + grp.apply(mu, x))
      throw Error(ErrorCode::NotBlockDiagonal, "layer is not a group element of its class");
  return mu;
}

class InitImpl final : public MorphismImpl {
 public:
  explicit InitImpl(const AbelianColoredGraph& g) : layout_(group_layout(g)) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < g.class_count(); ++i) {
      groups_.push_back(g.group(i));
      out_base_.push_back(total);
      const std::size_t k = g.class_size(i);
      total += k * k * k;
    }
    codomain_ = Domain{total};
  }
  std::string_view kind() const override { return "init"; }
  Domain source() const override { return Domain{layout_.size}; }
  Domain codomain() const override { return codomain_; }
  void evaluate_into(std::span<const Point> lambda, std::span<Point> out) const override {
    if (lambda.size() != layout_.size) throw Error(ErrorCode::DomainMismatch, "init morphism");
    std::vector<std::uint32_t> mu;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      const ClassGroup& grp = groups_[i];
      const std::size_t k = grp.size;
      mu.resize(k);
      for (std::uint32_t b = 0; b < k; ++b) mu[b] = layer_element(grp, layout_.layer_base[i], lambda, b);
      for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < k; ++b) {
          const std::uint32_t rho = grp.times(mu[a], grp.inv[mu[b]]);
          const std::size_t base = out_base_[i] + (a * k + b) * k;
          for (std::uint32_t x = 0; x < k; ++x) out[base + x] = static_cast<Point>(base + grp.apply(rho, x));
        }
    }
  }

 private:
  GroupLayout layout_;
  std::vector<ClassGroup> groups_;
  std::vector<std::size_t> out_base_;
  Domain codomain_;
};

class BlockImpl final : public MorphismImpl {
 public:
  BlockImpl(const AbelianColoredGraph& g, const BlockCosets& bc)
      : layout_(group_layout(g)), gi_(g.group(bc.i)), gj_(g.group(bc.j)), base_i_(0), base_j_(0),
        width_(bc.size()) {
    base_i_ = layout_.layer_base[bc.i];
    base_j_ = layout_.layer_base[bc.j];
    const std::size_t ki = gi_.size, kj = gj_.size;
    action_.resize(ki * kj * width_);
    for (std::uint32_t alpha = 0; alpha < ki; ++alpha)
      for (std::uint32_t beta = 0; beta < kj; ++beta) {
        const auto row = coset_action(g, bc, alpha, beta);
        std::copy(row.images().begin(), row.images().end(),
                  action_.begin() + static_cast<std::ptrdiff_t>((alpha * kj + beta) * width_));
      }
  }
  std::string_view kind() const override { return "block"; }
  Domain source() const override { return Domain{layout_.size}; }
  Domain codomain() const override { return Domain{gi_.size * gj_.size * width_}; }
  void evaluate_into(std::span<const Point> lambda, std::span<Point> out) const override {
    if (lambda.size() != layout_.size) throw Error(ErrorCode::DomainMismatch, "block morphism");
    const std::size_t ki = gi_.size, kj = gj_.size;
    std::vector<std::uint32_t> mu(ki), nu(kj);
    for (std::uint32_t a = 0; a < ki; ++a) mu[a] = layer_element(gi_, base_i_, lambda, a);
    for (std::uint32_t b = 0; b < kj; ++b) nu[b] = layer_element(gj_, base_j_, lambda, b);
    for (std::uint32_t a = 0; a < ki; ++a)
      for (std::uint32_t b = 0; b < kj; ++b) {
        const std::size_t base = (a * kj + b) * width_;
        const Point* row = action_.data() + (mu[a] * kj + nu[b]) * width_;
        for (std::size_t w = 0; w < width_; ++w) out[base + w] = static_cast<Point>(base + row[w]);
      }
  }

 private:
  GroupLayout layout_;
  ClassGroup gi_, gj_;
  std::size_t base_i_, base_j_, width_;
  std::vector<Point> action_;
};

}  // namespace

GroupLayout group_layout(const AbelianColoredGraph& g) {
  GroupLayout l;
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    l.layer_base.push_back(l.size);
    l.size += g.class_size(i) * g.class_size(i);
  }
  return l;
}

GeneratorSet labeling_group_generators(const AbelianColoredGraph& g) {
  const GroupLayout l = group_layout(g);
  GeneratorSet s = GeneratorSet::empty(l.size);
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    const ClassGroup& grp = g.group(i);
    const std::size_t k = grp.size;
    for (std::uint32_t src = 0; src < k; ++src) {
      auto images = iota_table(l.size);
      for (std::uint32_t b = 0; b < k; ++b) {
        const std::uint32_t mu = grp.taking(src, b);
        const std::size_t start = l.layer_base[i] + b * k;
        for (std::uint32_t x = 0; x < k; ++x) images[start + x] = static_cast<Point>(start + grp.apply(mu, x));
      }
      s.gens.push_back(Permutation::adopt(std::move(images)));
    }
  }
  return s;
}

Permutation labeling_element(const AbelianColoredGraph& g, const std::vector<Point>& anchors) {
  if (anchors.size() != g.class_count())
    throw Error(ErrorCode::LengthMismatch, "one anchor per class expected");
  const GroupLayout l = group_layout(g);
  auto images = iota_table(l.size);
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    if (g.class_of(anchors[i]) != i)
      throw Error(ErrorCode::WrongClass, "anchor " + std::to_string(anchors[i]) + " not in class " +
                                             std::to_string(i));
    const ClassGroup& grp = g.group(i);
    const std::size_t k = grp.size;
    const std::uint32_t src = g.local_of(anchors[i]);
    for (std::uint32_t b = 0; b < k; ++b) {
      const std::uint32_t mu = grp.taking(src, b);
      const std::size_t start = l.layer_base[i] + b * k;
      for (std::uint32_t x = 0; x < k; ++x) images[start + x] = static_cast<Point>(start + grp.apply(mu, x));
    }
  }
  return Permutation::adopt(std::move(images));
}

PermMorphism init_morphism(const AbelianColoredGraph& g) {
  return PermMorphism(std::make_shared<InitImpl>(g));
}

Permutation init_morphism_eval(const AbelianColoredGraph& g, const Permutation& lambda) {
  return evaluate(init_morphism(g), lambda);
}

Permutation init_value(const AbelianColoredGraph& g) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    const ClassGroup& grp = g.group(i);
    const std::size_t k = grp.size;
    for (std::uint32_t a = 0; a < k; ++a)
      for (std::uint32_t b = 0; b < k; ++b) {
        const std::uint32_t rho = grp.taking(b, a);
        const auto base = static_cast<Point>(out.size());
        for (std::uint32_t x = 0; x < k; ++x) out.push_back(base + grp.apply(rho, x));
      }
  }
  return Permutation::adopt(std::move(out));
}

BlockCosets block_cosets(const AbelianColoredGraph& g, std::size_t i, std::size_t j) {
  if (i == j || i >= g.class_count() || j >= g.class_count())
    throw Error(ErrorCode::IndexOutOfRange, "block cosets need two distinct classes");
  const ClassGroup& gi = g.group(i);
  const ClassGroup& gj = g.group(j);
  const std::size_t ki = gi.size, kj = gj.size;
  const std::vector<Edge> edges = g.block_edges(i, j);
  // Pairs whose joint action maps the block's edges onto themselves.
  const auto image = [&](Point p, std::uint32_t alpha, std::uint32_t beta) {
    const std::size_t c = g.class_of(p);
    const std::uint32_t x = g.local_of(p);
    return c == i ? g.point(i, gi.apply(alpha, x)) : g.point(j, gj.apply(beta, x));
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stabilizer;
  for (std::uint32_t alpha = 0; alpha < ki; ++alpha)
    for (std::uint32_t beta = 0; beta < kj; ++beta) {
      const bool keeps = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return std::binary_search(edges.begin(), edges.end(),
                                  Edge{image(e.first, alpha, beta), image(e.second, alpha, beta)});
      });
      if (keeps) stabilizer.emplace_back(alpha, beta);
    }
  BlockCosets bc;
  bc.i = i;
  bc.j = j;
  bc.coset_of.assign(ki * kj, kUnlabeled);
  for (std::uint32_t alpha = 0; alpha < ki; ++alpha)
    for (std::uint32_t beta = 0; beta < kj; ++beta) {
      if (bc.coset_of[alpha * kj + beta] != kUnlabeled) continue;
      const auto r = static_cast<std::uint32_t>(bc.reps.size());
      bc.reps.emplace_back(alpha, beta);
      for (const auto& [da, db] : stabilizer) bc.coset_of[gi.times(alpha, da) * kj + gj.times(beta, db)] = r;
    }
  return bc;
}

Permutation coset_action(const AbelianColoredGraph& g, const BlockCosets& bc, std::uint32_t alpha,
                     std::uint32_t beta) {
  const ClassGroup& gi = g.group(bc.i);
  const ClassGroup& gj = g.group(bc.j);
  if (alpha >= gi.size || beta >= gj.size)
    throw Error(ErrorCode::IndexOutOfRange, "group element index out of range");
  std::vector<Point> images(bc.size());
  for (std::size_t w = 0; w < bc.size(); ++w) {
    const auto [ra, rb] = bc.reps[w];
    images[w] = bc.coset_of[gi.times(alpha, ra) * gj.size + gj.times(beta, rb)];
  }
  return Permutation::adopt(std::move(images));
}

PermMorphism block_morphism(const AbelianColoredGraph& g, std::shared_ptr<const BlockCosets> bc) {
  return PermMorphism(std::make_shared<BlockImpl>(g, *bc));
}

Permutation block_morphism_eval(const AbelianColoredGraph& g, const BlockCosets& bc, const Permutation& lambda) {
  return evaluate(PermMorphism(std::make_shared<BlockImpl>(g, bc)), lambda);
}

Permutation block_value(const AbelianColoredGraph& g, const BlockCosets& bc, Point ai, Point aj) {
  if (ai >= g.n() || aj >= g.n() || g.class_of(ai) != bc.i || g.class_of(aj) != bc.j)
    throw Error(ErrorCode::WrongClass, "anchors must lie in classes " + std::to_string(bc.i) +
                                           " and " + std::to_string(bc.j));
  const ClassGroup& gi = g.group(bc.i);
  const ClassGroup& gj = g.group(bc.j);
  const std::uint32_t la = g.local_of(ai), lb = g.local_of(aj);
  const std::size_t width = bc.size();
  std::vector<Point> out(gi.size * gj.size * width);
  for (std::uint32_t a = 0; a < gi.size; ++a)
    for (std::uint32_t b = 0; b < gj.size; ++b) {
      const auto row = coset_action(g, bc, gi.taking(la, a), gj.taking(lb, b));
      const std::size_t base = (a * gj.size + b) * width;
      for (std::size_t w = 0; w < width; ++w) out[base + w] = static_cast<Point>(base + row(static_cast<Point>(w)));
    }
  return Permutation::adopt(std::move(out));
}

}  // namespace pgc
