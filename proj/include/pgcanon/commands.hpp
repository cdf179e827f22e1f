#pragma once

// Command implementations behind the command-line tool. Each returns a
// process exit code and writes results to `out`, diagnostics to `err`.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pgcanon/canon.hpp"

namespace pgc {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitInternal = 2, kExitOracle = 3 };

struct GlobalFlags {
  bool oracle = false;    ///< cross-check against the brute-force oracle
  bool paranoid = false;  ///< cross-check against a second engine path
  std::size_t cap = 10000;
  std::uint64_t seed = 1;
};

/// Runs `body`, mapping library errors to exit codes with a diagnostic.
int guarded(const std::function<int()>& body, std::ostream& err);

int cmd_order(const std::string& path, const GlobalFlags& flags, std::ostream& out, std::ostream& err);
int cmd_member(const std::string& path, const std::string& perm, const GlobalFlags& flags,
               std::ostream& out, std::ostream& err);
int cmd_rank(const std::string& path, const GlobalFlags& flags, std::ostream& out, std::ostream& err);
int cmd_canon(const std::string& path, const GlobalFlags& flags, std::ostream& out, std::ostream& err);

/// Canonical serialization of a colored-graph file's contents.
std::string canon_text(const std::string& text, const GlobalFlags& flags, std::ostream& err,
                       int& exit_code);

struct GenParams {
  std::string kind;  ///< cyclic | bipartite | cfi
  std::vector<std::size_t> sizes{4};
  double density = 0.3;
  double intra_density = 0.0;
  bool cycle = false;
  bool undirected = false;
  bool mixed = false;
  std::string base = "triangle";
  bool twisted = false;
  std::size_t twist_edge = 0;
  /// When set, applies an admissible relabeling with this seed.
  bool relabel = false;
  std::uint64_t relabel_seed = 0;
};

int cmd_gen(const GenParams& params, const GlobalFlags& flags, std::ostream& out, std::ostream& err);

int cmd_selftest(const GlobalFlags& flags, bool corrupt_order, std::ostream& out, std::ostream& err);

}  // namespace pgc
