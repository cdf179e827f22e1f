#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "pgcanon/commands.hpp"
#include "pgcanon/error.hpp"
#include "pgcanon/generators.hpp"
#include "pgcanon/io.hpp"

using namespace pgc;

namespace {

class TempFiles : public ::testing::Test {
 protected:
  std::string write(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / ("pgc_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    paths_.push_back(path);
    return path;
  }
  void TearDown() override {
    for (const auto& p : paths_) std::filesystem::remove(p);
  }

  struct Run {
    int code;
    std::string out, err;
  };
  template <class F>
  Run run(F&& f) {
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
  }

 private:
  std::vector<std::string> paths_;
};

std::string transpositions_file(std::size_t n) {
  GroupFile f;
  f.n = n;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) {
      std::vector<Point> images(n);
      for (Point x = 0; x < n; ++x) images[x] = x;
      std::swap(images[a], images[b]);
      f.generators.push_back(images);
    }
  return serialize(f);
}

}  // namespace

TEST_F(TempFiles, OrderExamples) {
  GlobalFlags flags;
  const auto five = write("t5.json", transpositions_file(5));
  auto r = run([&](auto& o, auto& e) { return cmd_order(five, flags, o, e); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "120\n");
  const auto empty = write("e.json", R"({"n": 4, "generators": []})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_order(empty, flags, o, e); }).out, "1\n");
  const auto cyc = write("c.json", R"({"n": 4, "generators": [[1,2,3,0]]})");
  flags.oracle = true;
  r = run([&](auto& o, auto& e) { return cmd_order(cyc, flags, o, e); });
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(r.code, kExitOk);
}

TEST_F(TempFiles, OrderInputErrors) {
  GlobalFlags flags;
  const auto bad = write("bad.json", R"({"n": 3, "generators": [[0,0,1]]})");
  auto r = run([&](auto& o, auto& e) { return cmd_order(bad, flags, o, e); });
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("NotABijection"), std::string::npos);
  const auto junk = write("junk.json", "{not json");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_order(junk, flags, o, e); }).code, kExitInput);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_order("/nonexistent/x.json", flags, o, e); }).code,
            kExitInput);
  const auto missing = write("missing.json", R"({"n": 3})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_order(missing, flags, o, e); }).code, kExitInput);
}

TEST_F(TempFiles, MemberExamples) {
  GlobalFlags flags;
  flags.paranoid = true;
  // Alternating group on 4 points from two 3-cycles.
  const auto a4 = write("a4.json", R"({"n": 4, "generators": [[1,2,0,3],[0,2,3,1]]})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_member(a4, "[0,1,2,3]", flags, o, e); }).out, "true\n");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_member(a4, "1,0,2,3", flags, o, e); }).out, "false\n");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_member(a4, "[1,2,0,3]", flags, o, e); }).out, "true\n");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_member(a4, "[1,0,2]", flags, o, e); }).code, kExitInput);
}

TEST_F(TempFiles, RankExamples) {
  GlobalFlags flags;
  flags.oracle = true;
  const auto id = write("id.json", R"({"modulus": 2, "rows": [[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_rank(id, flags, o, e); }).out, "3\n");
  const auto zero = write("z.json", R"({"modulus": 3, "rows": [[0,0],[0,0]]})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_rank(zero, flags, o, e); }).out, "0\n");
  const auto ones = write("o.json", R"({"modulus": 2, "rows": [[1,1],[1,1]]})");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_rank(ones, flags, o, e); }).out, "1\n");
  const auto comp = write("c.json", R"({"modulus": 4, "rows": [[1]]})");
  const auto r = run([&](auto& o, auto& e) { return cmd_rank(comp, flags, o, e); });
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("NonPrimeModulus"), std::string::npos);
}

TEST_F(TempFiles, CanonExamples) {
  GlobalFlags flags;
  flags.oracle = true;
  flags.paranoid = true;
  const auto c4 = write("c4.json", serialize(four_cycle_graph()));
  auto r = run([&](auto& o, auto& e) { return cmd_canon(c4, flags, o, e); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(parse_canonical_form(r.out).edges, (PairSet{{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  // Undirected input is expanded at read time.
  const auto b = write("b.json",
                       R"({"n":4,"classes":[[0,1],[2,3]],"edges":[[0,2]],"undirected":true,)"
                       R"("phi":[[[0,1],[1,0]],[[0,1],[1,0]]]})");
  r = run([&](auto& o, auto& e) { return cmd_canon(b, flags, o, e); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(parse_canonical_form(r.out).edges, (PairSet{{0, 2}, {2, 0}}));
  const auto rb = write("rb.json", serialize(relabel(two_pairs_graph(), 5)));
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_canon(rb, flags, o, e); }).out, r.out);
}

TEST_F(TempFiles, CanonValidationErrors) {
  GlobalFlags flags;
  const auto nonab = write("n.json",
                           R"({"n":3,"classes":[[0,1,2]],"edges":[],"phi":[[[0,1,2],[1,0,2],[0,2,1]]]})");
  const auto r = run([&](auto& o, auto& e) { return cmd_canon(nonab, flags, o, e); });
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("NotAGroup"), std::string::npos);
}

TEST_F(TempFiles, OracleSkippedAboveCap) {
  GlobalFlags flags;
  flags.oracle = true;
  flags.cap = 2;
  const auto c4 = write("c4.json", serialize(four_cycle_graph()));
  const auto r = run([&](auto& o, auto& e) { return cmd_canon(c4, flags, o, e); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("skipped"), std::string::npos);
}

TEST(Gen, CyclicFourCycleAndDeterminism) {
  GlobalFlags flags;
  GenParams p;
  p.kind = "cyclic";
  p.sizes = {4};
  p.cycle = true;
  p.density = 0.0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_gen(p, flags, out, err), kExitOk);
  EXPECT_EQ(parse_colored_graph(out.str()), four_cycle_graph());

  p.sizes = {3, 4, 2};
  p.density = 0.5;
  p.mixed = true;
  flags.seed = 9;
  std::ostringstream a, b;
  cmd_gen(p, flags, a, err);
  cmd_gen(p, flags, b, err);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NO_THROW(validate(parse_colored_graph(a.str())));
}

TEST(Gen, BipartiteAndCfi) {
  GlobalFlags flags;
  flags.seed = 7;
  GenParams p;
  p.kind = "bipartite";
  p.sizes = {2, 2};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_gen(p, flags, out, err), kExitOk);
  EXPECT_EQ(validate(parse_colored_graph(out.str())).class_count(), 2u);

  p.kind = "cfi";
  p.base = "triangle";
  std::ostringstream cfi;
  EXPECT_EQ(cmd_gen(p, flags, cfi, err), kExitOk);
  EXPECT_NE(cfi.str().find("\"base\""), std::string::npos);
  const auto g = validate(parse_colored_graph(cfi.str()));
  for (std::size_t i = 0; i < g.class_count(); ++i)
    for (std::uint32_t mu = 0; mu < g.class_size(i); ++mu) EXPECT_EQ(g.group(i).times(mu, mu), 0u);

  p.base = "dodecahedron";
  std::ostringstream bad, bad_err;
  EXPECT_EQ(cmd_gen(p, flags, bad, bad_err), kExitInput);
  p.kind = "bipartite";
  p.sizes = {2, 2, 2};
  EXPECT_EQ(cmd_gen(p, flags, bad, bad_err), kExitInput);
}

TEST(Io, RoundTrips) {
  GroupFile gf{3, {{1, 0, 2}, {0, 2, 1}}};
  EXPECT_EQ(parse_group_file(serialize(gf)), gf);
  MatrixFile mf{5, {{1, -2}, {3, 4}}};
  EXPECT_EQ(parse_matrix_file(serialize(mf)), mf);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto raw = random_instance(s, 4, 5);
    EXPECT_EQ(parse_colored_graph(serialize(raw)), raw);
    const auto form = canonize(validate(raw));
    EXPECT_EQ(parse_canonical_form(serialize(form)), form);
  }
  EXPECT_EQ(parse_image_sequence("2, 0,1"), (std::vector<Point>{2, 0, 1}));
  EXPECT_EQ(parse_image_sequence("[2,0,1]"), (std::vector<Point>{2, 0, 1}));
}

TEST(Io, CanonicalSerializationIsCompactAndSorted) {
  const auto text = serialize(canonize(validate(two_pairs_graph())));
  EXPECT_EQ(text, R"({"class_sizes":[2,2],"edges":[[0,2],[2,0]],"n":4,"phi":[[[0,1],[1,0]],[[0,1],[1,0]]]})");
}

TEST(Io, ShapeErrors) {
  const auto code = [](auto&& f) -> std::optional<ErrorCode> {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  EXPECT_EQ(code([] { parse_group_file(R"({"n": "three", "generators": []})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { parse_colored_graph(R"({"n":2,"classes":[[0,1]],"edges":[[0]],"phi":[]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code([] { parse_matrix_file("[]"); }), ErrorCode::ParseError);
  EXPECT_EQ(code([] { to_generator_set(GroupFile{3, {{0, 1}}}); }), ErrorCode::LengthMismatch);
}
