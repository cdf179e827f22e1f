#pragma once

// Group morphisms into permutation groups, given as evaluators, and the
// subgroups and cosets they define.
//
// A morphism m : G -> Sym(codomain) is never tabulated over G. It is a
// function that maps a permutation of G's domain to a permutation of the
// codomain, and everything else (kernel order, kernel membership, coset
// emptiness) is derived from stabilizer chains over images of generators.

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pgcanon/group.hpp"
#include "pgcanon/perm.hpp"

namespace pgc {

/// Chain of a group of joint permutations acting on lead points [0, lead)
/// and tail points [lead, lead + tail), neither part mixing with the other.
/// The leading levels have base points in the lead part, so they form a chain
/// of the projection onto the lead part; the remaining levels form a chain of
/// the elements acting trivially on the lead part.
class DiagonalChain {
 public:
  DiagonalChain(std::size_t lead, std::size_t tail, const std::vector<std::vector<Point>>& joint);

  std::size_t lead_size() const { return lead_; }
  std::size_t tail_size() const { return tail_; }
  std::size_t lead_depth() const { return lead_depth_; }
  const StabilizerChain& chain() const { return chain_; }

  BigCard projection_order() const;
  /// Order of the subgroup acting trivially on the lead part.
  BigCard stabilizer_order() const;

  bool projection_contains(std::span<const Point> lead_part) const;
  /// A joint element whose lead part is `lead_part`, if one exists.
  std::optional<std::vector<Point>> lift(std::span<const Point> lead_part) const;
  /// Tail parts of a generating set of the subgroup acting trivially on the lead part.
  std::vector<Permutation> stabilizer_tail_generators() const;

 private:
  std::size_t lead_, tail_, lead_depth_ = 0;
  StabilizerChain chain_;
};

class MorphismImpl {
 public:
  virtual ~MorphismImpl() = default;
  virtual std::string_view kind() const = 0;
  virtual Domain source() const = 0;
  virtual Domain codomain() const = 0;
  /// Writes m(sigma) into out (sized codomain().size). sigma is on source().
  virtual void evaluate_into(std::span<const Point> sigma, std::span<Point> out) const = 0;
};

/// Immutable handle to a morphism evaluator; cheap to copy.
class PermMorphism {
 public:
  PermMorphism() = default;
  explicit PermMorphism(std::shared_ptr<const MorphismImpl> impl);

  /// Everything maps to the codomain identity.
  static PermMorphism trivial(Domain source, Domain codomain);
  /// sigma -> sigma.
  static PermMorphism identity(Domain domain);
  /// sigma -> sigma restricted to [first, first + count). That block must be
  /// invariant under every evaluated sigma, otherwise EvaluationOutsideSource.
  static PermMorphism restriction(Domain source, Point first, std::size_t count);
  /// The morphism sending gens.gens[k] to images[k], extended multiplicatively.
  /// Throws NotAMorphism when no such morphism exists.
  static PermMorphism table(const GeneratorSet& gens, std::vector<Permutation> images,
                            Domain codomain);

  std::string_view kind() const { return impl_->kind(); }
  Domain source() const { return impl_->source(); }
  Domain codomain() const { return impl_->codomain(); }
  const MorphismImpl& impl() const { return *impl_; }
  const std::shared_ptr<const MorphismImpl>& handle() const { return impl_; }

  /// Factors when this is a product, otherwise empty.
  std::span<const PermMorphism> factors() const;

 private:
  std::shared_ptr<const MorphismImpl> impl_;
};

/// Block permutation on the tagged disjoint union of the parts' domains.
Permutation block_sum(std::span<const Permutation> parts);

Permutation evaluate(const PermMorphism& m, const Permutation& sigma);

/// {m(g) | g in s}.
GeneratorSet image_generators(const PermMorphism& m, const GeneratorSet& s);

/// |<s>| / |im m|. Throws NonDivisible when m is not a morphism on <s>.
BigCard kernel_order(const PermMorphism& m, const GeneratorSet& s);

bool kernel_contains(const PermMorphism& m, const GeneratorSet& s, const Permutation& tau);

/// Product morphism; codomain is the tagged disjoint union of the factors'
/// codomains, so ker(tensor(ms)) is the intersection of the kernels.
/// Nested products are flattened. Throws SourceMismatch.
PermMorphism tensor(std::span<const PermMorphism> ms);

/// Direct product embedding: tag t's generators act on layer t of
/// tags x per-tag-domain and fix every other layer. Throws DomainMismatch.
GeneratorSet embed_family(std::span<const GeneratorSet> family);

/// The set {g in <group> : morphism(g) == value}.
struct MorphismCoset {
  GeneratorSet group;
  PermMorphism morphism;
  Permutation value;
};

/// Image and kernel of m restricted to <s>, from one chain with the codomain
/// as the lead part.
class MorphismSplit {
 public:
  MorphismSplit(const PermMorphism& m, const GeneratorSet& s);

  BigCard image_order() const { return chain_.projection_order(); }
  BigCard kernel_order() const { return chain_.stabilizer_order(); }
  bool image_contains(const Permutation& w) const;
  /// Some g in <s> with m(g) == w, or nullopt when w is not in the image.
  std::optional<Permutation> preimage(const Permutation& w) const;
  GeneratorSet kernel_generators() const;

 private:
  Domain source_, codomain_;
  DiagonalChain chain_;
};

/// Throws SourceMismatch when the ambient groups differ.
MorphismCoset coset_intersect(const MorphismCoset& c1, const MorphismCoset& c2);

bool coset_is_empty(const MorphismCoset& c);

BigCard coset_size(const MorphismCoset& c);

}  // namespace pgc
