#include "pgcanon/morphism.hpp"

#include <algorithm>

#include "pgcanon/error.hpp"
#include "pgcanon/simd/kernels.hpp"

namespace pgc {

namespace {

void check_source(const MorphismImpl& m, std::span<const Point> sigma) {
  if (sigma.size() != m.source().size)
    throw Error(ErrorCode::DomainMismatch, std::string(m.kind()) + ": argument on " +
                                               std::to_string(sigma.size()) + " points, source has " +
                                               std::to_string(m.source().size));
}

class TrivialImpl final : public MorphismImpl {
 public:
  TrivialImpl(Domain s, Domain c) : source_(s), codomain_(c) {}
  std::string_view kind() const override { return "trivial"; }
  Domain source() const override { return source_; }
  Domain codomain() const override { return codomain_; }
  void evaluate_into(std::span<const Point> sigma, std::span<Point> out) const override {
    check_source(*this, sigma);
    simd::active().iota(out.data(), out.size());
  }

 private:
  Domain source_, codomain_;
};

class IdentityImpl final : public MorphismImpl {
 public:
  explicit IdentityImpl(Domain d) : domain_(d) {}
  std::string_view kind() const override { return "identity"; }
  Domain source() const override { return domain_; }
  Domain codomain() const override { return domain_; }
  void evaluate_into(std::span<const Point> sigma, std::span<Point> out) const override {
    check_source(*this, sigma);
    std::copy(sigma.begin(), sigma.end(), out.begin());
  }

 private:
  Domain domain_;
};

class RestrictionImpl final : public MorphismImpl {
 public:
  RestrictionImpl(Domain s, Point first, std::size_t count)
      : source_(s), first_(first), count_(count) {}
  std::string_view kind() const override { return "restriction"; }
  Domain source() const override { return source_; }
  Domain codomain() const override { return Domain{count_}; }
  void evaluate_into(std::span<const Point> sigma, std::span<Point> out) const override {
    check_source(*this, sigma);
    for (std::size_t x = 0; x < count_; ++x) {
      const Point y = sigma[first_ + x];
      if (y < first_ || y >= first_ + count_)
        throw Error(ErrorCode::EvaluationOutsideSource, "restriction: block is not invariant");
      out[x] = y - first_;
    }
  }

 private:
  Domain source_;
  Point first_;
  std::size_t count_;
};

// Generator -> image association, held as the group of pairs (g, m(g)) on
// source + codomain points. The association is a function exactly when no
// nontrivial pair has a trivial source part.
class TableImpl final : public MorphismImpl {
 public:
  TableImpl(const GeneratorSet& gens, const std::vector<Permutation>& images, Domain codomain)
      : source_(gens.domain), codomain_(codomain), chain_(build(gens, images, codomain)) {
    if (chain_.stabilizer_order() != 1)
      throw Error(ErrorCode::NotAMorphism,
                  "table: the identity would have a nontrivial image");
  }

  std::string_view kind() const override { return "table"; }
  Domain source() const override { return source_; }
  Domain codomain() const override { return codomain_; }

  void evaluate_into(std::span<const Point> sigma, std::span<Point> out) const override {
    check_source(*this, sigma);
    const auto joint = chain_.lift(sigma);
    if (!joint)
      throw Error(ErrorCode::EvaluationOutsideSource, "table: argument outside the source group");
    const std::size_t n = source_.size;
    for (std::size_t x = 0; x < codomain_.size; ++x)
      out[x] = static_cast<Point>((*joint)[n + x] - n);
  }

 private:
  static DiagonalChain build(const GeneratorSet& gens, const std::vector<Permutation>& images,
                             Domain codomain) {
    if (images.size() != gens.gens.size())
      throw Error(ErrorCode::NotAMorphism, "table: generator and image counts differ");
    const std::size_t n = gens.domain.size, c = codomain.size;
    std::vector<std::vector<Point>> joint;
    for (std::size_t k = 0; k < images.size(); ++k) {
      if (images[k].size() != c)
        throw Error(ErrorCode::DomainMismatch, "table: image not on the codomain");
      std::vector<Point> j(gens.gens[k].images().begin(), gens.gens[k].images().end());
      for (Point y : images[k].images()) j.push_back(static_cast<Point>(n + y));
      joint.push_back(std::move(j));
    }
    return DiagonalChain(n, c, joint);
  }

  Domain source_, codomain_;
  DiagonalChain chain_;
};

class ProductImpl final : public MorphismImpl {
 public:
  explicit ProductImpl(std::vector<PermMorphism> factors) : factors_(std::move(factors)) {
    source_ = factors_.front().source();
    for (const auto& f : factors_) {
      offsets_.push_back(total_);
      total_ += f.codomain().size;
    }
  }
  std::string_view kind() const override { return "product"; }
  Domain source() const override { return source_; }
  Domain codomain() const override { return Domain{total_}; }
  void evaluate_into(std::span<const Point> sigma, std::span<Point> out) const override {
    check_source(*this, sigma);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const std::size_t off = offsets_[f], len = factors_[f].codomain().size;
      auto block = out.subspan(off, len);
      factors_[f].impl().evaluate_into(sigma, block);
      for (auto& y : block) y += static_cast<Point>(off);
    }
  }
  std::span<const PermMorphism> factors() const { return factors_; }

 private:
  std::vector<PermMorphism> factors_;
  std::vector<std::size_t> offsets_;
  Domain source_;
  std::size_t total_ = 0;
};

void require_chain_domain(const PermMorphism& m, const GeneratorSet& s) {
  if (m.source() != s.domain)
    throw Error(ErrorCode::DomainMismatch, "morphism source has " +
                                               std::to_string(m.source().size) +
                                               " points, generators act on " +
                                               std::to_string(s.domain.size));
}

}  // namespace

DiagonalChain::DiagonalChain(std::size_t lead, std::size_t tail,
                             const std::vector<std::vector<Point>>& joint)
    : lead_(lead), tail_(tail) {
  StabilizerChain projection{Domain{lead}};
  for (const auto& g : joint) {
    if (g.size() != lead + tail) throw Error(ErrorCode::DomainMismatch, "diagonal chain generator");
    const auto part = Permutation::adopt(std::vector<Point>(g.begin(), g.begin() + lead));
    if (!part.is_identity()) projection.add_generator(part);
  }
  const std::vector<Point> base = projection.base();
  lead_depth_ = base.size();
  chain_ = StabilizerChain(Domain{lead + tail}, base);
  for (const auto& g : joint) {
    const auto p = Permutation::adopt(g);
    if (!p.is_identity()) chain_.add_generator(p);
  }
}

BigCard DiagonalChain::projection_order() const {
  BigCard n = 1;
  for (std::size_t l = 0; l < lead_depth_; ++l) n *= chain_.orbit_size(l);
  return n;
}

BigCard DiagonalChain::stabilizer_order() const {
  BigCard n = 1;
  for (std::size_t l = lead_depth_; l < chain_.depth(); ++l) n *= chain_.orbit_size(l);
  return n;
}

bool DiagonalChain::projection_contains(std::span<const Point> lead_part) const {
  if (lead_part.size() != lead_) throw Error(ErrorCode::DomainMismatch, "projection_contains");
  std::vector<Point> residue(lead_part.begin(), lead_part.end()), next(lead_);
  const std::vector<Point> base = chain_.base();
  for (std::size_t l = 0; l < lead_depth_; ++l) {
    const auto inv = chain_.rep_inverse_images(l, residue[base[l]]);
    if (inv.empty()) return false;
    for (std::size_t x = 0; x < lead_; ++x) next[x] = inv[residue[x]];
    residue.swap(next);
  }
  return simd::active().first_moved(residue.data(), lead_) == lead_;
}

std::optional<std::vector<Point>> DiagonalChain::lift(std::span<const Point> lead_part) const {
  if (lead_part.size() != lead_) throw Error(ErrorCode::DomainMismatch, "lift");
  const auto& k = simd::active();
  const std::size_t total = lead_ + tail_;
  // lead_part == (acc * residue) on the lead points throughout.
  std::vector<Point> residue(lead_part.begin(), lead_part.end()), next(lead_);
  std::vector<Point> acc(total), tmp(total);
  k.iota(acc.data(), total);
  const std::vector<Point> base = chain_.base();
  for (std::size_t l = 0; l < lead_depth_; ++l) {
    const Point beta = residue[base[l]];
    const auto inv = chain_.rep_inverse_images(l, beta);
    if (inv.empty()) return std::nullopt;
    for (std::size_t x = 0; x < lead_; ++x) next[x] = inv[residue[x]];
    residue.swap(next);
    k.compose(tmp.data(), acc.data(), chain_.rep_images(l, beta).data(), total);
    acc.swap(tmp);
  }
  if (k.first_moved(residue.data(), lead_) != lead_) return std::nullopt;
  return acc;
}

std::vector<Permutation> DiagonalChain::stabilizer_tail_generators() const {
  std::vector<Permutation> out;
  if (lead_depth_ >= chain_.depth()) return out;
  for (const auto& g : chain_.level_generators(lead_depth_)) {
    std::vector<Point> t(tail_);
    for (std::size_t x = 0; x < tail_; ++x) t[x] = static_cast<Point>(g(static_cast<Point>(lead_ + x)) - lead_);
    out.push_back(Permutation::adopt(std::move(t)));
  }
  return out;
}

namespace {

std::vector<std::vector<Point>> split_generators(const PermMorphism& m, const GeneratorSet& s) {
  if (m.source() != s.domain) throw Error(ErrorCode::DomainMismatch, "morphism split");
  const std::size_t c = m.codomain().size;
  std::vector<std::vector<Point>> joint;
  joint.reserve(s.gens.size());
  for (const auto& g : s.gens) {
    std::vector<Point> j(c);
    m.impl().evaluate_into(g.images(), j);
    for (Point y : g.images()) j.push_back(static_cast<Point>(c + y));
    joint.push_back(std::move(j));
  }
  return joint;
}

}  // namespace

MorphismSplit::MorphismSplit(const PermMorphism& m, const GeneratorSet& s)
    : source_(s.domain),
      codomain_(m.codomain()),
      chain_(m.codomain().size, s.domain.size, split_generators(m, s)) {}

bool MorphismSplit::image_contains(const Permutation& w) const {
  if (w.domain() != codomain_) throw Error(ErrorCode::DomainMismatch, "image_contains");
  return chain_.projection_contains(w.images());
}

std::optional<Permutation> MorphismSplit::preimage(const Permutation& w) const {
  if (w.domain() != codomain_) throw Error(ErrorCode::DomainMismatch, "preimage");
  const auto joint = chain_.lift(w.images());
  if (!joint) return std::nullopt;
  const std::size_t c = codomain_.size;
  std::vector<Point> g(source_.size);
  for (std::size_t x = 0; x < g.size(); ++x) g[x] = static_cast<Point>((*joint)[c + x] - c);
  return Permutation::adopt(std::move(g));
}

GeneratorSet MorphismSplit::kernel_generators() const {
  return GeneratorSet(source_, chain_.stabilizer_tail_generators());
}

PermMorphism::PermMorphism(std::shared_ptr<const MorphismImpl> impl) : impl_(std::move(impl)) {}

PermMorphism PermMorphism::trivial(Domain source, Domain codomain) {
  return PermMorphism(std::make_shared<TrivialImpl>(source, codomain));
}

PermMorphism PermMorphism::identity(Domain domain) {
  return PermMorphism(std::make_shared<IdentityImpl>(domain));
}

PermMorphism PermMorphism::restriction(Domain source, Point first, std::size_t count) {
  if (first + count > source.size)
    throw Error(ErrorCode::IndexOutOfRange, "restriction block exceeds the source domain");
  return PermMorphism(std::make_shared<RestrictionImpl>(source, first, count));
}

PermMorphism PermMorphism::table(const GeneratorSet& gens, std::vector<Permutation> images,
                                 Domain codomain) {
  return PermMorphism(std::make_shared<TableImpl>(gens, images, codomain));
}

std::span<const PermMorphism> PermMorphism::factors() const {
  if (const auto* p = dynamic_cast<const ProductImpl*>(impl_.get())) return p->factors();
  return {};
}

Permutation block_sum(std::span<const Permutation> parts) {
  std::vector<Point> out;
  for (const auto& p : parts) {
    const auto off = static_cast<Point>(out.size());
    for (Point y : p.images()) out.push_back(y + off);
  }
  return Permutation::adopt(std::move(out));
}

Permutation evaluate(const PermMorphism& m, const Permutation& sigma) {
  std::vector<Point> out(m.codomain().size);
  m.impl().evaluate_into(sigma.images(), out);
  return Permutation::adopt(std::move(out));
}

GeneratorSet image_generators(const PermMorphism& m, const GeneratorSet& s) {
  require_chain_domain(m, s);
  GeneratorSet out = GeneratorSet::empty(m.codomain().size);
  out.gens.reserve(s.gens.size());
  for (const auto& g : s.gens) out.gens.push_back(evaluate(m, g));
  return out;
}

BigCard kernel_order(const PermMorphism& m, const GeneratorSet& s) {
  const BigCard whole = build_chain(s).order();
  const BigCard image = build_chain(image_generators(m, s)).order();
  if (whole % image != 0)
    throw Error(ErrorCode::NonDivisible, "image order " + to_decimal(image) +
                                             " does not divide group order " + to_decimal(whole));
  return whole / image;
}

bool kernel_contains(const PermMorphism& m, const GeneratorSet& s, const Permutation& tau) {
  if (tau.domain() != s.domain) throw Error(ErrorCode::DomainMismatch, "kernel_contains");
  require_chain_domain(m, s);
  if (!build_chain(s).contains(tau)) return false;
  return evaluate(m, tau).is_identity();
}

PermMorphism tensor(std::span<const PermMorphism> ms) {
  if (ms.empty()) throw Error(ErrorCode::SourceMismatch, "tensor of no morphisms");
  std::vector<PermMorphism> flat;
  for (const auto& m : ms) {
    if (m.source() != ms.front().source())
      throw Error(ErrorCode::SourceMismatch, "tensor factors act on different sources");
    const auto sub = m.factors();
    if (sub.empty())
      flat.push_back(m);
    else
      flat.insert(flat.end(), sub.begin(), sub.end());
  }
  return PermMorphism(std::make_shared<ProductImpl>(std::move(flat)));
}

GeneratorSet embed_family(std::span<const GeneratorSet> family) {
  if (family.empty()) return GeneratorSet{};
  const std::size_t d = family.front().domain.size;
  const std::size_t total = d * family.size();
  GeneratorSet out = GeneratorSet::empty(total);
  for (std::size_t t = 0; t < family.size(); ++t) {
    if (family[t].domain.size != d)
      throw Error(ErrorCode::DomainMismatch, "embed_family: members on different domains");
    for (const auto& g : family[t].gens) {
      std::vector<Point> images(total);
      simd::active().iota(images.data(), total);
      for (std::size_t x = 0; x < d; ++x)
        images[t * d + x] = static_cast<Point>(t * d + g(static_cast<Point>(x)));
      out.gens.push_back(Permutation::adopt(std::move(images)));
    }
  }
  return out;
}

MorphismCoset coset_intersect(const MorphismCoset& c1, const MorphismCoset& c2) {
  if (c1.group.domain != c2.group.domain || c1.group.gens != c2.group.gens)
    throw Error(ErrorCode::SourceMismatch, "cosets live in different ambient groups");
  const PermMorphism parts[] = {c1.morphism, c2.morphism};
  // Nested products flatten, and block sums of block sums have the same layout.
  const Permutation values[] = {c1.value, c2.value};
  return MorphismCoset{c1.group, tensor(parts), block_sum(values)};
}

bool coset_is_empty(const MorphismCoset& c) {
  if (c.value.domain() != c.morphism.codomain())
    throw Error(ErrorCode::DomainMismatch, "coset value is not on the morphism codomain");
  return !build_chain(image_generators(c.morphism, c.group)).contains(c.value);
}

BigCard coset_size(const MorphismCoset& c) {
  if (coset_is_empty(c)) return 0;
  return kernel_order(c.morphism, c.group);
}

}  // namespace pgc
