// Command-line front end: order | member | rank | canon | gen | selftest.

#include <CLI11.hpp>
#include <iostream>

#include "pgcanon/commands.hpp"

int main(int argc, char** argv) {
  using namespace pgc;
  CLI::App app{"Permutation group orders, ranks mod p and canonical forms of graphs with abelian colors"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--oracle", flags.oracle, "Cross-check against the brute-force oracle");
  app.add_flag("--paranoid", flags.paranoid, "Cross-check against a second engine path");
  app.add_option("--cap", flags.cap, "Size cap for brute-force oracles")->capture_default_str();
  app.add_option("--seed", flags.seed, "Seed for generators and selftest")->capture_default_str();

  std::string path, perm;
  auto* order = app.add_subcommand("order", "Print the order of the group in a group file");
  order->add_option("file", path, "Group file")->required();
  auto* member = app.add_subcommand("member", "Print whether a permutation lies in the group");
  member->add_option("file", path, "Group file")->required();
  member->add_option("perm", perm, "Image sequence, e.g. [1,0,2] or 1,0,2")->required();
  auto* rank = app.add_subcommand("rank", "Print the rank of a matrix file over its prime modulus");
  rank->add_option("file", path, "Matrix file")->required();
  auto* canon = app.add_subcommand("canon", "Print the canonical form of a colored-graph file");
  canon->add_option("file", path, "Colored-graph file")->required();

  GenParams gen;
  std::uint64_t relabel_seed = 0;
  auto* g = app.add_subcommand("gen", "Print a generated colored-graph file");
  g->add_option("kind", gen.kind, "cyclic | bipartite | cfi")->required()->check(CLI::IsMember({"cyclic", "bipartite", "cfi"}));
  g->add_option("--sizes", gen.sizes, "Class sizes")->delimiter(',');
  g->add_option("--density", gen.density, "Inter-class edge probability")->check(CLI::Range(0.0, 1.0));
  g->add_option("--intra-density", gen.intra_density, "Intra-class edge probability")->check(CLI::Range(0.0, 1.0));
  g->add_flag("--cycle", gen.cycle, "Add the cycle x -> x+1 inside every class");
  g->add_flag("--undirected", gen.undirected, "Emit both orientations of random edges");
  g->add_flag("--mixed", gen.mixed, "Random abelian class groups, shuffled");
  g->add_option("--base", gen.base, "Base graph for cfi")->capture_default_str();
  g->add_flag("--twisted", gen.twisted, "Twist one connection of the cfi gadget graph");
  g->add_option("--twist-edge", gen.twist_edge, "Base edge carrying the twist");
  auto* relabel_opt = g->add_option("--relabel", relabel_seed, "Apply an admissible relabeling with this seed");

  bool corrupt = false;
  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_flag("--corrupt-order", corrupt, "Negative control: reverse the block order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*order) return cmd_order(path, flags, std::cout, std::cerr);
  if (*member) return cmd_member(path, perm, flags, std::cout, std::cerr);
  if (*rank) return cmd_rank(path, flags, std::cout, std::cerr);
  if (*canon) return cmd_canon(path, flags, std::cout, std::cerr);
  if (*g) {
    gen.relabel = relabel_opt->count() > 0;
    gen.relabel_seed = relabel_seed;
    return cmd_gen(gen, flags, std::cout, std::cerr);
  }
  if (*selftest) return cmd_selftest(flags, corrupt, std::cout, std::cerr);
  return kExitInput;
}
