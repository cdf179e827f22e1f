// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "pgcanon/selftest.hpp"

namespace {

using pgc::SuiteResult;

struct Criterion {
  int id;
  std::string title;
  double bound_seconds;  // 0 when the criterion carries no runtime bound
  std::vector<SuiteResult> parts;
};

bool report(const Criterion& c) {
  bool ok = true;
  double seconds = 0;
  std::string detail;
  for (const auto& p : c.parts) {
    seconds += p.seconds;
    if (!p.passed && ok) detail = p.name + ": " + p.detail;
    ok &= p.passed;
  }
  if (ok) {
    for (const auto& p : c.parts) detail += (detail.empty() ? "" : "; ") + p.name + ": " + p.detail;
  }
  const bool in_time = c.bound_seconds == 0 || seconds < c.bound_seconds;
  if (!in_time) detail = "runtime bound exceeded; " + detail;
  ok &= in_time;
  std::printf("[%s] criterion %2d %-32s %8.2fs", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds);
  if (c.bound_seconds > 0) std::printf(" (bound %.0fs)", c.bound_seconds);
  std::printf("  %s\n", detail.c_str());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  constexpr std::uint64_t seed = 20240601;
  bool all = true;

  all &= report({1, "factorial law", 1, {pgc::factorial_suite(3, 7)}});

  const auto closure = pgc::closure_suite(200, seed);
  all &= report({2, "closure oracle", 30, {closure[0]}});
  all &= report({3, "membership by order", 0, {closure[1]}});

  all &= report({4, "first isomorphism law", 0, {pgc::first_isomorphism_suite(100, seed)}});
  all &= report({5, "rank oracle", 60, {pgc::rank_suite(500, seed, 8)}});
  all &= report({6, "solvability", 0, {pgc::solvability_suite(200, 50, seed)}});
  all &= report({7, "canonization oracle", 300, {pgc::canon_oracle_suite(100, seed)}});
  all &= report({8, "isomorphism invariance", 0,
                 {pgc::invariance_suite(100, 10, seed), pgc::cfi_suite(10, seed)}});
  all &= report({9, "structural properties", 120, pgc::structural_suite(20, seed)});
  // Each run must stay under 60 s; the suite enforces the per-instance bound.
  all &= report({10, "scale", 0, {pgc::scale_suite(20, seed, 60.0)}});

  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
