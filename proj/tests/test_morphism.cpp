#include <gtest/gtest.h>

#include <set>

#include "pgcanon/error.hpp"
#include "pgcanon/morphism.hpp"
#include "support.hpp"

namespace pgc {
namespace {

const Permutation kSwap2 = Permutation::from_images({1, 0});

// Z2 x Z2 acting on {0,1} and {2,3}.
GeneratorSet klein() {
  return {Domain{4}, {Permutation::from_images({1, 0, 2, 3}), Permutation::from_images({0, 1, 3, 2})}};
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

bool is_odd(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (Point x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

// Sign as a table morphism, images from direct parity computation.
PermMorphism sign_morphism(const GeneratorSet& s) {
  std::vector<Permutation> images;
  for (const auto& g : s.gens) images.push_back(is_odd(g) ? kSwap2 : Permutation::identity(2));
  return PermMorphism::table(s, images, Domain{2});
}

std::vector<Permutation> brute_kernel(const PermMorphism& m, const GeneratorSet& s) {
  std::vector<Permutation> out;
  for (const auto& g : closure_bruteforce(s, 5040))
    if (evaluate(m, g).is_identity()) out.push_back(g);
  return out;
}

TEST(Evaluate, TrivialAndProduct) {
  const auto s = klein();
  const auto triv = PermMorphism::trivial(Domain{4}, Domain{3});
  EXPECT_TRUE(evaluate(triv, s.gens[0]).is_identity());
  EXPECT_EQ(evaluate(triv, s.gens[0]).size(), 3u);
  const auto proj = PermMorphism::restriction(Domain{4}, 0, 2);
  const PermMorphism parts[] = {proj, PermMorphism::trivial(Domain{4}, Domain{2})};
  const auto prod = tensor(parts);
  EXPECT_EQ(evaluate(prod, s.gens[0]), Permutation::from_images({1, 0, 2, 3}));
  EXPECT_TRUE(evaluate(prod, s.gens[1]).is_identity());
  EXPECT_EQ(code_of([&] { evaluate(proj, Permutation::identity(3)); }), ErrorCode::DomainMismatch);
}

TEST(ImageGenerators, Examples) {
  const auto s = klein();
  const auto triv = image_generators(PermMorphism::trivial(Domain{4}, Domain{2}), s);
  EXPECT_EQ(build_chain(triv).order(), 1);
  EXPECT_EQ(build_chain(image_generators(PermMorphism::identity(Domain{4}), s)).order(), 4);
  EXPECT_EQ(build_chain(image_generators(PermMorphism::restriction(Domain{4}, 0, 2), s)).order(), 2);
}

TEST(KernelOrder, Examples) {
  const auto s = klein();
  EXPECT_EQ(kernel_order(PermMorphism::trivial(Domain{4}, Domain{1}), s), 4);
  EXPECT_EQ(kernel_order(PermMorphism::identity(Domain{4}), s), 1);
  EXPECT_EQ(kernel_order(PermMorphism::restriction(Domain{4}, 0, 2), s), 2);
}

TEST(KernelOrder, NonDivisibleSignalsNonMorphism) {
  // A "morphism" sending the order-2 generator to a 3-cycle cannot exist;
  // evaluate via a hand-rolled impl that ignores multiplicativity.
  struct Bogus final : MorphismImpl {
    std::string_view kind() const override { return "bogus"; }
    Domain source() const override { return Domain{2}; }
    Domain codomain() const override { return Domain{3}; }
    void evaluate_into(std::span<const Point>, std::span<Point> out) const override {
      out[0] = 1, out[1] = 2, out[2] = 0;
    }
  };
  const PermMorphism m(std::make_shared<Bogus>());
  const GeneratorSet s{Domain{2}, {kSwap2}};
  EXPECT_EQ(code_of([&] { kernel_order(m, s); }), ErrorCode::NonDivisible);
}

TEST(KernelContains, Examples) {
  const auto s = klein();
  const auto proj = PermMorphism::restriction(Domain{4}, 0, 2);
  EXPECT_TRUE(kernel_contains(proj, s, Permutation::identity(4)));
  EXPECT_TRUE(kernel_contains(proj, s, s.gens[1]));
  EXPECT_FALSE(kernel_contains(proj, s, s.gens[0]));
  // (2 3) composed with a 4-cycle is not in the group at all.
  EXPECT_FALSE(kernel_contains(PermMorphism::trivial(Domain{4}, Domain{1}), s,
                               Permutation::from_images({1, 2, 3, 0})));
}

TEST(Tensor, Examples) {
  const auto s = klein();
  const auto p1 = PermMorphism::restriction(Domain{4}, 0, 2);
  const auto p2 = PermMorphism::restriction(Domain{4}, 2, 2);
  const PermMorphism single[] = {p1};
  EXPECT_EQ(evaluate(tensor(single), s.gens[0]), evaluate(p1, s.gens[0]));
  const PermMorphism with_trivial[] = {p1, PermMorphism::trivial(Domain{4}, Domain{5})};
  EXPECT_EQ(kernel_order(tensor(with_trivial), s), kernel_order(p1, s));
  const PermMorphism both[] = {p1, p2};
  EXPECT_EQ(kernel_order(tensor(both), s), 1);
  const PermMorphism mismatched[] = {p1, PermMorphism::identity(Domain{3})};
  EXPECT_EQ(code_of([&] { tensor(mismatched); }), ErrorCode::SourceMismatch);
}

TEST(Tensor, NestedProductsFlatten) {
  const auto p1 = PermMorphism::restriction(Domain{4}, 0, 2);
  const auto p2 = PermMorphism::restriction(Domain{4}, 2, 2);
  const PermMorphism inner[] = {p1, p2};
  const PermMorphism outer[] = {tensor(inner), p1};
  EXPECT_EQ(tensor(outer).factors().size(), 3u);
  EXPECT_EQ(tensor(outer).codomain().size, 6u);
}

TEST(EmbedFamily, Examples) {
  const GeneratorSet z3{Domain{3}, {Permutation::from_images({1, 2, 0})}};
  const GeneratorSet one[] = {z3};
  EXPECT_EQ(build_chain(embed_family(one)).order(), 3);
  const GeneratorSet two[] = {z3, z3};
  const auto e = embed_family(two);
  EXPECT_EQ(e.domain.size, 6u);
  EXPECT_EQ(closure_bruteforce(e, 100).size(), 9u);
  const GeneratorSet with_empty[] = {z3, GeneratorSet::empty(3)};
  EXPECT_EQ(build_chain(embed_family(with_empty)).order(), 3);
}

TEST(Coset, Examples) {
  const auto s = klein();
  const auto p1 = PermMorphism::restriction(Domain{4}, 0, 2);
  const auto p2 = PermMorphism::restriction(Domain{4}, 2, 2);
  const MorphismCoset full{s, PermMorphism::trivial(Domain{4}, Domain{1}), Permutation::identity(1)};
  const MorphismCoset c1{s, p1, kSwap2};
  EXPECT_EQ(coset_size(full), 4);
  EXPECT_EQ(coset_size(c1), 2);
  EXPECT_EQ(coset_size(coset_intersect(c1, full)), 2);
  EXPECT_EQ(coset_size(coset_intersect(c1, c1)), 2);
  const MorphismCoset c2{s, p2, kSwap2};
  EXPECT_EQ(coset_size(coset_intersect(c1, c2)), 1);
  EXPECT_FALSE(coset_is_empty({s, p1, Permutation::identity(2)}));
  EXPECT_TRUE(coset_is_empty({s, PermMorphism::trivial(Domain{4}, Domain{2}), kSwap2}));
  EXPECT_EQ(coset_size({s, PermMorphism::trivial(Domain{4}, Domain{2}), kSwap2}), 0);
  // Klein group on {0,1,2} u {3,4}; the projection to the first block never moves 2.
  const GeneratorSet k5{Domain{5}, {Permutation::from_images({1, 0, 2, 3, 4}),
                                    Permutation::from_images({0, 1, 2, 4, 3})}};
  EXPECT_TRUE(coset_is_empty({k5, PermMorphism::restriction(Domain{5}, 0, 3),
                              Permutation::from_images({0, 2, 1})}));
  const MorphismCoset elsewhere{k5, PermMorphism::restriction(Domain{5}, 0, 2), kSwap2};
  EXPECT_EQ(code_of([&] { coset_intersect(c1, elsewhere); }), ErrorCode::SourceMismatch);
}

TEST(Table, SignOfCyclicGroup) {
  const GeneratorSet c4{Domain{4}, {Permutation::from_images({1, 2, 3, 0})}};
  const auto sign = sign_morphism(c4);
  EXPECT_EQ(evaluate(sign, c4.gens[0]), kSwap2);
  EXPECT_TRUE(evaluate(sign, compose(c4.gens[0], c4.gens[0])).is_identity());
  EXPECT_EQ(kernel_order(sign, c4), 2);
  EXPECT_EQ(code_of([&] { evaluate(sign, Permutation::from_images({1, 0, 2, 3})); }),
            ErrorCode::EvaluationOutsideSource);
}

TEST(Table, RejectsNonMorphisms) {
  const GeneratorSet c4{Domain{4}, {Permutation::from_images({1, 2, 3, 0})}};
  EXPECT_EQ(code_of([&] {
              PermMorphism::table(c4, {Permutation::from_images({1, 2, 0})}, Domain{3});
            }),
            ErrorCode::NotAMorphism);
  // Two generators of one cyclic group sent inconsistently: g and g^3 must map
  // to mutually inverse images.
  const auto g = c4.gens[0];
  const GeneratorSet twice{Domain{4}, {g, compose(g, compose(g, g))}};
  const auto c3 = Permutation::from_images({1, 2, 0});
  EXPECT_EQ(code_of([&] { PermMorphism::table(twice, {c3, c3}, Domain{3}); }),
            ErrorCode::NotAMorphism);
  EXPECT_NO_THROW(PermMorphism::table(
      GeneratorSet{Domain{4}, {compose(g, g)}}, {kSwap2}, Domain{2}));
}

// Random groups preserving the block split [0, p) | [p, n), with several morphisms on each.
struct Instance {
  GeneratorSet group;
  std::vector<PermMorphism> morphisms;
};

Instance random_instance(testing::Rng& rng) {
  const std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3, n = p + q;
  GeneratorSet s = GeneratorSet::empty(n);
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t k = 0; k < count; ++k) {
    const auto a = testing::random_perm(rng, p), b = testing::random_perm(rng, q);
    std::vector<Point> images;
    for (Point y : a.images()) images.push_back(y);
    for (Point y : b.images()) images.push_back(static_cast<Point>(p + y));
    s.gens.push_back(Permutation::from_images(images));
  }
  Instance inst{s, {}};
  inst.morphisms.push_back(PermMorphism::restriction(Domain{n}, 0, p));
  inst.morphisms.push_back(PermMorphism::restriction(Domain{n}, static_cast<Point>(p), q));
  inst.morphisms.push_back(PermMorphism::identity(Domain{n}));
  inst.morphisms.push_back(PermMorphism::trivial(Domain{n}, Domain{2}));
  inst.morphisms.push_back(sign_morphism(s));
  const PermMorphism pair[] = {inst.morphisms[0], inst.morphisms[4]};
  inst.morphisms.push_back(tensor(pair));
  return inst;
}

Permutation random_element(testing::Rng& rng, const GeneratorSet& s) {
  Permutation x = Permutation::identity(s.domain.size);
  if (s.gens.empty()) return x;
  for (int k = 0; k < 12; ++k) x = compose(s.gens[rng() % s.gens.size()], x);
  return x;
}

TEST(MorphismProperties, Multiplicative) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng);
    for (const auto& m : inst.morphisms) {
      EXPECT_TRUE(evaluate(m, Permutation::identity(inst.group.domain.size)).is_identity());
      for (int k = 0; k < 50; ++k) {
        const auto a = random_element(rng, inst.group), b = random_element(rng, inst.group);
        EXPECT_EQ(evaluate(m, compose(a, b)), compose(evaluate(m, a), evaluate(m, b))) << m.kind();
      }
    }
  }
}

TEST(MorphismProperties, FirstIsomorphismAndKernels) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = random_instance(rng);
    const auto& s = inst.group;
    const auto closure = closure_bruteforce(s, 5040);
    for (const auto& m : inst.morphisms) {
      const BigCard k = kernel_order(m, s);
      EXPECT_EQ(k * build_chain(image_generators(m, s)).order(), closure.size());
      const auto kernel = brute_kernel(m, s);
      EXPECT_EQ(k, kernel.size());
      for (int q = 0; q < 20; ++q) {
        const auto x = q % 2 ? random_element(rng, s) : testing::random_perm(rng, s.domain.size);
        EXPECT_EQ(kernel_contains(m, s, x), testing::in_sorted(kernel, x));
      }
      // One chain gives image and kernel together.
      const MorphismSplit split(m, s);
      EXPECT_EQ(split.kernel_order(), k);
      EXPECT_EQ(split.image_order() * k, closure.size());
      const auto kgens = split.kernel_generators();
      EXPECT_EQ(closure_bruteforce(kgens, 5040), kernel);
      for (int q = 0; q < 10; ++q) {
        const auto g = random_element(rng, s);
        const auto w = evaluate(m, g);
        const auto pre = split.preimage(w);
        ASSERT_TRUE(pre.has_value());
        EXPECT_TRUE(testing::in_sorted(closure, *pre));
        EXPECT_EQ(evaluate(m, *pre), w);
        EXPECT_TRUE(split.image_contains(w));
      }
    }
  }
}

TEST(MorphismProperties, TensorKernelIsIntersection) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng);
    const auto& a = inst.morphisms[rng() % inst.morphisms.size()];
    const auto& b = inst.morphisms[rng() % inst.morphisms.size()];
    const PermMorphism ab[] = {a, b};
    const auto ka = brute_kernel(a, inst.group), kb = brute_kernel(b, inst.group);
    std::vector<Permutation> both;
    std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(both));
    EXPECT_EQ(brute_kernel(tensor(ab), inst.group), both);
  }
}

TEST(MorphismProperties, EmbeddingOrderIsProduct) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + rng() % 4, tags = 1 + rng() % 3;
    std::vector<GeneratorSet> family;
    BigCard expected = 1;
    for (std::size_t t = 0; t < tags; ++t) {
      family.push_back(testing::random_generators(rng, d, rng() % 3, true));
      expected *= closure_bruteforce(family.back(), 5040).size();
    }
    const auto e = embed_family(family);
    EXPECT_EQ(closure_bruteforce(e, 20000).size(), expected);
  }
}

TEST(MorphismProperties, CosetSemantics) {
  testing::Rng rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng);
    const auto closure = closure_bruteforce(inst.group, 5040);
    for (const auto& m : inst.morphisms) {
      for (int q = 0; q < 4; ++q) {
        // Half the values come from the image, half are arbitrary.
        const Permutation v = q % 2 ? evaluate(m, random_element(rng, inst.group))
                                    : testing::random_perm(rng, m.codomain().size);
        const MorphismCoset c{inst.group, m, v};
        std::size_t count = 0;
        for (const auto& g : closure) count += evaluate(m, g) == v;
        EXPECT_EQ(coset_size(c), count);
        EXPECT_EQ(coset_is_empty(c), count == 0);
      }
    }
  }
}

}  // namespace
}  // namespace pgc
