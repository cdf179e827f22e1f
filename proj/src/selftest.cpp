#include "pgcanon/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "pgcanon/commands.hpp"
#include "pgcanon/error.hpp"
#include "pgcanon/generators.hpp"
#include "pgcanon/io.hpp"
#include "pgcanon/morphism.hpp"
#include "pgcanon/rank.hpp"

namespace pgc {

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

// Collects cases and the first failure of one suite.
class Recorder {
 public:
  explicit Recorder(std::string name) : start_(Clock::now()) { r_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = what;
    }
  }
  void fail(const std::string& what) { check(false, what); }
  bool passed() const { return r_.passed; }

  SuiteResult finish(std::string summary = {}) {
    r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (r_.passed) r_.detail = std::move(summary);
    return r_;
  }

 private:
  SuiteResult r_;
  Clock::time_point start_;
};

Permutation random_perm(Rng& rng, std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

// Short cycles keep closures small; full random permutations usually give S_n or A_n.
GeneratorSet random_generators(Rng& rng, std::size_t n) {
  GeneratorSet s = GeneratorSet::empty(n);
  const std::size_t count = rng() % 4;
  const bool small = rng() % 3 != 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (!small) {
      s.gens.push_back(random_perm(rng, n));
      continue;
    }
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(std::min<std::size_t>(n, 2 + rng() % 2));
    s.gens.push_back(Permutation::from_cycles(n, {pts}));
  }
  return s;
}

Permutation random_word(Rng& rng, const GeneratorSet& s) {
  Permutation x = Permutation::identity(s.domain.size);
  if (s.gens.empty()) return x;
  for (int k = 0; k < 12; ++k) x = compose(s.gens[rng() % s.gens.size()], x);
  return x;
}

bool is_odd(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (Point x = 0; x < p.size(); ++x)
    for (Point y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      if (y != x) ++transpositions;
    }
  return transpositions % 2 == 1;
}

std::string seed_note(std::uint64_t s) { return " (seed " + std::to_string(s) + ")"; }

// ---------------------------------------------------------------------------
// Canonization corpora

// Instances with at most max_tuples anchor tuples.
// With `large`, every class has one of the two largest sizes.
RawColoredGraph oracle_instance(Rng& rng, std::size_t max_classes, std::size_t max_size,
                                std::size_t max_tuples, bool large = false) {
  for (;;) {
    CyclicParams p;
    // Mostly several classes: single-class instances exercise refinement only.
    const std::size_t m = large ? max_classes : rng() % 10 == 0 ? 1 : 2 + rng() % (max_classes - 1);
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < m; ++i) {
      p.class_sizes.push_back(large ? max_size - rng() % 2 : 1 + rng() % max_size);
      tuples *= p.class_sizes.back();
    }
    if (tuples > max_tuples) continue;
    p.density = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
    p.intra_density = rng() % 3 == 0 ? 0.25 : 0.0;
    p.cycle = rng() % 5 == 0;
    p.undirected = rng() % 2 == 0;
    p.mixed = rng() % 3 != 0;
    return gen_cyclic(p, rng());
  }
}

std::vector<std::vector<Point>> all_anchor_tuples(const AbelianColoredGraph& g) {
  std::vector<std::vector<Point>> out{{}};
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    std::vector<std::vector<Point>> next;
    for (const auto& t : out)
      for (Point p : g.raw().classes[i]) {
        auto u = t;
        u.push_back(p);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

// The class element gamma with map_b = map_a o gamma on class i, by search.
std::optional<std::uint32_t> transfer(const AbelianColoredGraph& g, std::size_t i, Point a, Point b) {
  const ClassGroup& grp = g.group(i);
  const auto la = local_labeling(g, i, a).table, lb = local_labeling(g, i, b).table;
  std::optional<std::uint32_t> found;
  for (std::uint32_t mu = 0; mu < grp.size; ++mu) {
    bool all = true;
    for (std::uint32_t x = 0; x < grp.size && all; ++x)
      all = lb.value[g.point(i, x)] == la.value[g.point(i, grp.apply(mu, x))];
    if (all) {
      if (found) return std::nullopt;
      found = mu;
    }
  }
  return found;
}

Permutation layer_constant(const AbelianColoredGraph& g, const std::vector<std::uint32_t>& gamma) {
  const GroupLayout l = group_layout(g);
  std::vector<Point> images(l.size);
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    const ClassGroup& grp = g.group(i);
    for (std::uint32_t b = 0; b < grp.size; ++b) {
      const std::size_t start = l.layer_base[i] + b * grp.size;
      for (std::uint32_t x = 0; x < grp.size; ++x)
        images[start + x] = static_cast<Point>(start + grp.apply(gamma[i], x));
    }
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult factorial_suite(std::size_t lo, std::size_t hi) {
  Recorder rec("factorial law");
  for (std::size_t n = lo; n <= hi; ++n) {
    GeneratorSet s = GeneratorSet::empty(n);
    for (Point a = 0; a < n; ++a)
      for (Point b = a + 1; b < n; ++b) s.gens.push_back(Permutation::from_cycles(n, {{a, b}}));
    BigCard fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    const BigCard got = build_chain(s).order();
    rec.check(got == fact, "n=" + std::to_string(n) + ": order " + to_decimal(got));
  }
  return rec.finish("n=" + std::to_string(lo) + ".." + std::to_string(hi));
}

std::vector<SuiteResult> closure_suite(std::size_t count, std::uint64_t seed) {
  Recorder chain("closure oracle"), by_order("membership by order");
  Rng rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const GeneratorSet s = random_generators(rng, n);
    const auto closure = closure_bruteforce(s, 5040);
    const StabilizerChain c = build_chain(s);
    const std::string where = "case " + std::to_string(t);
    chain.check(c.order() == closure.size(), where + ": order " + to_decimal(c.order()) +
                                                 " vs closure " + std::to_string(closure.size()));
    for (int q = 0; q < 8; ++q) {
      const Permutation x = q % 2 ? closure[rng() % closure.size()] : random_perm(rng, n);
      const bool member = c.contains(x);
      chain.check(member == std::binary_search(closure.begin(), closure.end(), x), where + ": contains");
      by_order.check(membership_by_order(s, x) == member, where + ": order test disagrees");
    }
  }
  return {chain.finish(std::to_string(count) + " generating sets"),
          by_order.finish(std::to_string(count) + " generating sets")};
}

SuiteResult first_isomorphism_suite(std::size_t count, std::uint64_t seed) {
  Recorder rec("first isomorphism");
  Rng rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    // Groups preserving the split [0, p) | [p, n).
    const std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3, n = p + q;
    GeneratorSet s = GeneratorSet::empty(n);
    for (std::size_t k = 0, gens = 1 + rng() % 3; k < gens; ++k) {
      const auto a = random_perm(rng, p), b = random_perm(rng, q);
      std::vector<Point> images(a.images().begin(), a.images().end());
      for (Point y : b.images()) images.push_back(static_cast<Point>(p + y));
      s.gens.push_back(Permutation::from_images(images));
    }
    std::vector<Permutation> sign_images;
    for (const auto& g : s.gens)
      sign_images.push_back(is_odd(g) ? Permutation::from_images({1, 0}) : Permutation::identity(2));
    std::vector<PermMorphism> ms{PermMorphism::restriction(Domain{n}, 0, p),
                                 PermMorphism::restriction(Domain{n}, static_cast<Point>(p), q),
                                 PermMorphism::identity(Domain{n}), PermMorphism::trivial(Domain{n}, Domain{3}),
                                 PermMorphism::table(s, sign_images, Domain{2})};
    const PermMorphism pair[] = {ms[1], ms[4]};
    ms.push_back(tensor(pair));

    const auto closure = closure_bruteforce(s, 5040);
    const BigCard order = build_chain(s).order();
    for (const auto& m : ms) {
      const std::string where = "case " + std::to_string(t) + " " + std::string(m.kind());
      const BigCard ker = kernel_order(m, s);
      const BigCard im = build_chain(image_generators(m, s)).order();
      rec.check(ker * im == order && order == closure.size(), where + ": |ker||im| != |G|");
      std::vector<Permutation> kernel;
      for (const auto& g : closure)
        if (evaluate(m, g).is_identity()) kernel.push_back(g);
      rec.check(ker == kernel.size(), where + ": kernel order");
      for (int k = 0; k < 10; ++k) {
        const Permutation x = k % 2 ? random_word(rng, s) : random_perm(rng, n);
        rec.check(kernel_contains(m, s, x) == std::binary_search(kernel.begin(), kernel.end(), x),
                  where + ": kernel membership");
      }
    }
  }
  return rec.finish(std::to_string(count) + " groups, 6 morphisms each");
}

namespace {

MatrixModP random_matrix(Rng& rng, std::uint32_t m, std::size_t max_dim) {
  const std::size_t r = 1 + rng() % max_dim, c = 1 + rng() % max_dim;
  std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
  const std::uint64_t sparsity = 1 + rng() % 3;
  for (auto& row : rows)
    for (auto& v : row) v = rng() % sparsity == 0 ? static_cast<std::int64_t>(rng() % m) : 0;
  if (r > 1 && rng() % 3 == 0) rows[r - 1] = rows[0];
  return MatrixModP(m, rows);
}

std::vector<std::int64_t> random_vector(Rng& rng, std::uint32_t m, std::size_t len) {
  std::vector<std::int64_t> y(len);
  for (auto& v : y) v = rng() % 2 ? static_cast<std::int64_t>(rng() % m) : 0;
  return y;
}

// Row span by additive closure; nullopt when it exceeds cap.
std::optional<std::set<std::vector<std::uint32_t>>> row_span(const MatrixModP& m, std::size_t cap) {
  std::set<std::vector<std::uint32_t>> span{std::vector<std::uint32_t>(m.cols(), 0)};
  std::vector<std::vector<std::uint32_t>> frontier(span.begin(), span.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& v : frontier)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto w = v;
        for (std::size_t j = 0; j < m.cols(); ++j) w[j] = (w[j] + m.at(r, j)) % m.modulus();
        if (span.insert(w).second) {
          if (span.size() > cap) return std::nullopt;
          next.push_back(std::move(w));
        }
      }
    frontier.swap(next);
  }
  return span;
}

}  // namespace

SuiteResult rank_suite(std::size_t count, std::uint64_t seed, std::size_t max_dim) {
  Recorder rec("rank oracle");
  Rng rng(seed);
  constexpr std::uint32_t primes[] = {2, 3, 5, 7};
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint32_t p = primes[t % 4];
    const auto m = random_matrix(rng, p, max_dim);
    const std::size_t r = rank_p(m);
    const std::string where = "case " + std::to_string(t) + " mod " + std::to_string(p);
    rec.check(r == gauss_rank(m), where + ": rank " + std::to_string(r) + " vs " + std::to_string(gauss_rank(m)));
    BigCard power = 1;
    for (std::size_t k = 0; k < r; ++k) power *= p;
    rec.check(build_chain(image_group_generators(m)).order() == power, where + ": image order");
  }
  return rec.finish(std::to_string(count) + " matrices up to " + std::to_string(max_dim) + "x" +
                    std::to_string(max_dim));
}

SuiteResult solvability_suite(std::size_t prime_count, std::size_t composite_count, std::uint64_t seed) {
  Recorder rec("solvability");
  Rng rng(seed);
  constexpr std::uint32_t primes[] = {2, 3, 5, 7};
  for (std::size_t t = 0; t < prime_count; ++t) {
    const std::uint32_t p = primes[t % 4];
    const auto m = random_matrix(rng, p, 6);
    const auto y = random_vector(rng, p, m.cols());
    std::vector<std::vector<std::int64_t>> aug;
    for (std::size_t a = 0; a < m.rows(); ++a) aug.emplace_back(m.row(a).begin(), m.row(a).end());
    aug.push_back(y);
    const bool expect = gauss_rank(MatrixModP(p, aug)) == gauss_rank(m);
    rec.check(solvable_mod_m(m, VecModM::reduced(p, y)) == expect, "prime case " + std::to_string(t));
  }
  constexpr std::uint32_t composites[] = {4, 6, 8, 9, 10, 12};
  for (std::size_t t = 0; t < composite_count;) {
    const std::uint32_t mod = composites[rng() % 6];
    const auto m = random_matrix(rng, mod, 4);
    const auto span = row_span(m, 10000);
    if (!span) continue;
    for (int q = 0; q < 10; ++q) {
      const auto y = VecModM::reduced(mod, random_vector(rng, mod, m.cols()));
      rec.check(solvable_mod_m(m, y) == span->contains(y.entries),
                "composite case " + std::to_string(t) + " mod " + std::to_string(mod));
    }
    ++t;
  }
  return rec.finish(std::to_string(prime_count) + " prime, " + std::to_string(composite_count) +
                    " composite");
}

SuiteResult canon_oracle_suite(std::size_t count, std::uint64_t seed, const CanonOptions& opt) {
  Recorder rec("canonize vs oracle");
  Rng rng(seed);
  std::size_t largest = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const auto raw = oracle_instance(rng, 5, 6, 10000, t % 4 == 0);
    const std::string where = "case " + std::to_string(t);
    std::size_t tuples = 1;
    for (const auto& c : raw.classes) tuples *= c.size();
    largest = std::max(largest, tuples);
    try {
      const auto g = validate(raw);
      // Refinement can split a class into parts whose sizes multiply to more
      // than the class size (6 -> 2+2+2), at most 1.5x per class.
      rec.check(canonize(g, opt) == canon_oracle(g, 100000), where + ": forms differ");
    } catch (const Error& e) {
      rec.fail(where + ": " + e.what());
    }
  }
  return rec.finish(std::to_string(count) + " instances, up to " + std::to_string(largest) + " anchor tuples");
}

SuiteResult invariance_suite(std::size_t count, std::size_t relabelings, std::uint64_t seed) {
  Recorder rec("relabeling invariance");
  Rng rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    const auto raw = oracle_instance(rng, 6, 6, 1000000);
    const std::string base = serialize(canonize(validate(raw)));
    for (std::size_t r = 0; r < relabelings; ++r)
      rec.check(serialize(canonize(validate(relabel(raw, rng())))) == base,
                "case " + std::to_string(t) + " relabeling " + std::to_string(r));
  }
  return rec.finish(std::to_string(count) + " instances x " + std::to_string(relabelings) + " relabelings");
}

SuiteResult cfi_suite(std::size_t relabelings, std::uint64_t seed) {
  Recorder rec("gadget twists");
  Rng rng(seed);
  for (const auto& name : base_graph_names()) {
    const BaseGraph base = base_graph(name);
    const std::string plain = serialize(canonize(validate(gen_cfi(base, false))));
    const std::string twisted = serialize(canonize(validate(gen_cfi(base, true))));
    rec.check(plain != twisted, name + ": twisted and untwisted forms coincide");
    for (std::size_t e = 0; e < base.edges.size(); ++e)
      rec.check(serialize(canonize(validate(gen_cfi(base, true, e)))) == twisted,
                name + ": twist on edge " + std::to_string(e) + " changes the form");
    for (std::size_t r = 0; r < relabelings; ++r) {
      rec.check(serialize(canonize(validate(relabel(gen_cfi(base, false), rng())))) == plain,
                name + ": relabeled untwisted");
      rec.check(serialize(canonize(validate(relabel(gen_cfi(base, true), rng())))) == twisted,
                name + ": relabeled twisted");
    }
  }
  return rec.finish(std::to_string(base_graph_names().size()) + " base graphs");
}

std::vector<SuiteResult> structural_suite(std::size_t count, std::uint64_t seed) {
  Recorder coset("local labelings form cosets"), encoding("group encoding per anchor"),
      multiplicative("init morphism multiplicative"), init_coset("init coset is the labelings"),
      value_rec("block value characterizes encoding"), winners("winners share block value"),
      quotient("labeling quotient");
  std::vector<std::pair<std::string, AbelianColoredGraph>> corpus{{"two pairs", validate(two_pairs_graph())},
                                                                  {"four cycle", validate(four_cycle_graph())}};
  for (std::size_t k = 0; k < count; ++k)
    corpus.emplace_back("random" + seed_note(seed + k), validate(random_instance(seed + k, 3, 3)));
  Rng rng(seed);

  for (const auto& [name, g] : corpus) {
    const auto tuples = all_anchor_tuples(g);
    for (std::size_t i = 0; i < g.class_count(); ++i) {
      const std::size_t k = g.class_size(i), off = g.group(i).offset;
      std::set<std::vector<std::vector<Point>>> encodings;
      for (Point a : g.raw().classes[i]) {
        for (Point b : g.raw().classes[i]) coset.check(transfer(g, i, a, b).has_value(), name);
        const auto l = local_labeling(g, i, a).table;
        std::vector<std::vector<Point>> rows;
        for (const auto& element : g.raw().phi[i]) {
          std::vector<Point> row(k);
          for (std::uint32_t x = 0; x < k; ++x)
            row[l.value[g.point(i, x)] - off] = static_cast<Point>(l.value[g.point(i, element[x])] - off);
          rows.push_back(std::move(row));
        }
        encodings.insert(std::move(rows));
      }
      encoding.check(encodings.size() == 1, name + " class " + std::to_string(i));
    }

    const auto elements = closure_bruteforce(labeling_group_generators(g), 1 << 20);
    for (int t = 0; t < 30; ++t) {
      const auto& x = elements[rng() % elements.size()];
      const auto& y = elements[rng() % elements.size()];
      multiplicative.check(init_morphism_eval(g, compose(x, y)) == compose(init_morphism_eval(g, x), init_morphism_eval(g, y)), name);
    }
    const Permutation v = init_value(g);
    std::set<Permutation> solutions, labelings;
    for (const auto& x : elements)
      if (init_morphism_eval(g, x) == v) solutions.insert(x);
    for (const auto& t : tuples) labelings.insert(labeling_element(g, t));
    init_coset.check(solutions == labelings, name);

    for (std::size_t i = 0; i < g.class_count(); ++i)
      for (std::size_t j = i + 1; j < g.class_count(); ++j) {
        const auto bc = block_cosets(g, i, j);
        const auto edges = g.block_edges(i, j);
        for (const auto& t : tuples) {
          const Permutation image = block_morphism_eval(g, bc, labeling_element(g, t));
          const PairSet enc_t = encode_relative(edges, anchored_labeling(g, t));
          for (Point a : g.raw().classes[i])
            for (Point b : g.raw().classes[j]) {
              const PairSet enc_ab = encode_relative(edges, join_labelings(local_labeling(g, i, a), local_labeling(g, j, b)));
              value_rec.check((image == block_value(g, bc, a, b)) == (enc_t == enc_ab),
                                name + " block (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
      }

    CanonState st = initial_state(std::make_shared<const AbelianColoredGraph>(g));
    for (std::size_t i = 0; i < g.class_count(); ++i)
      for (std::size_t j = i + 1; j < g.class_count(); ++j) {
        const MinPairs mp = min_pairs(st, i, j);
        for (const auto& [a, b] : mp.pairs) winners.check(block_value(g, *mp.cosets, a, b) == mp.value, name);
        apply_block(st, i, j, mp);
      }

    for (int t = 0; t < 20; ++t) {
      const auto& s = tuples[rng() % tuples.size()];
      const auto& u = tuples[rng() % tuples.size()];
      std::vector<std::uint32_t> gamma;
      for (std::size_t i = 0; i < g.class_count(); ++i) gamma.push_back(*transfer(g, i, s[i], u[i]));
      quotient.check(compose(inverse(labeling_element(g, s)), labeling_element(g, u)) == layer_constant(g, gamma),
                     name);
    }
  }
  const std::string summary = std::to_string(corpus.size()) + " instances";
  return {coset.finish(summary),          encoding.finish(summary),    multiplicative.finish(summary),
          init_coset.finish(summary),     value_rec.finish(summary), winners.finish(summary),
          quotient.finish(summary)};
}

SuiteResult scale_suite(std::size_t count, std::uint64_t seed, double limit_seconds) {
  Recorder rec("scale");
  Rng rng(seed);
  double worst = 0;
  std::size_t worst_n = 0;
  for (std::size_t t = 0; t < count; ++t) {
    CyclicParams p;
    std::size_t n = 0;
    if (t % 2 == 0) {
      // The largest shape: 8 classes, n = 60.
      p.class_sizes = {8, 8, 8, 8, 7, 7, 7, 7};
      std::shuffle(p.class_sizes.begin(), p.class_sizes.end(), rng);
      n = 60;
    } else {
      const std::size_t m = 5 + rng() % 4;
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = std::min<std::size_t>(4 + rng() % 5, 60 - n - (m - i - 1));
        p.class_sizes.push_back(k);
        n += k;
      }
    }
    p.density = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
    p.intra_density = rng() % 3 == 0 ? 0.2 : 0.0;
    p.undirected = rng() % 2 == 0;
    p.mixed = true;
    const std::string text = serialize(gen_cyclic(p, rng()));
    std::ostringstream err;
    int code = kExitOk;
    const auto start = Clock::now();
    canon_text(text, GlobalFlags{}, err, code);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > worst) {
      worst = secs;
      worst_n = n;
    }
    rec.check(code == kExitOk, "case " + std::to_string(t) + ": exit " + std::to_string(code) + " " + err.str());
    rec.check(secs < limit_seconds, "case " + std::to_string(t) + ": " + std::to_string(secs) + " s");
  }
  std::ostringstream summary;
  summary << count << " instances, slowest " << worst << " s (n=" << worst_n << ")";
  return rec.finish(summary.str());
}

SuiteResult io_suite(std::size_t count, std::uint64_t seed) {
  Recorder rec("file formats");
  Rng rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    const std::string where = "case " + std::to_string(t);
    GroupFile gf;
    gf.n = 1 + rng() % 6;
    for (std::size_t k = 0, c = rng() % 4; k < c; ++k) {
      const auto p = random_perm(rng, gf.n);
      gf.generators.emplace_back(p.images().begin(), p.images().end());
    }
    rec.check(parse_group_file(serialize(gf)) == gf, where + ": group file");
    MatrixFile mf;
    mf.modulus = 2 + static_cast<std::uint32_t>(rng() % 9);
    mf.rows.assign(1 + rng() % 4, std::vector<std::int64_t>(1 + rng() % 4));
    for (auto& row : mf.rows)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 20) - 10;
    rec.check(parse_matrix_file(serialize(mf)) == mf, where + ": matrix file");
    const auto raw = random_instance(rng(), 5, 6);
    rec.check(parse_colored_graph(serialize(raw)) == raw, where + ": colored graph file");
    try {
      validate(raw);
      rec.check(true, where);
    } catch (const Error& e) {
      rec.fail(where + ": generated instance invalid: " + e.what());
    }
    const auto form = canonize(validate(raw));
    rec.check(parse_canonical_form(serialize(form)) == form, where + ": canonical form");
    std::ostringstream err;
    int c1 = 0, c2 = 0;
    const std::string text = serialize(raw);
    rec.check(canon_text(text, GlobalFlags{}, err, c1) == canon_text(text, GlobalFlags{}, err, c2),
              where + ": output not deterministic");
  }
  for (const auto& name : base_graph_names()) {
    try {
      validate(gen_cfi(base_graph(name), true));
      rec.check(true, name);
    } catch (const Error& e) {
      rec.fail(name + ": " + e.what());
    }
  }
  return rec.finish(std::to_string(count) + " round trips");
}

}  // namespace pgc
