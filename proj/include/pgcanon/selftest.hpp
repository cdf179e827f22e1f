#pragma once

// Property suites comparing the engines against brute-force oracles on
// seeded random corpora. Shared by the selftest command and the acceptance
// runner.

#include <cstdint>
#include <string>
#include <vector>

#include "pgcanon/canon.hpp"

namespace pgc {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  ///< first failure, or a short summary
  double seconds = 0;
};

/// Order of the transpositions on n points equals n!, for lo <= n <= hi.
SuiteResult factorial_suite(std::size_t lo, std::size_t hi);

/// Random generating sets on at most 7 points: chain order and sifting
/// against closure enumeration, then membership by order against sifting.
std::vector<SuiteResult> closure_suite(std::size_t count, std::uint64_t seed);

/// Groups with several morphisms each: |ker| |im| = |G| and kernel membership
/// against the enumerated kernel.
SuiteResult first_isomorphism_suite(std::size_t count, std::uint64_t seed);

/// Rank through the image group against Gaussian elimination, matrices up to
/// max_dim x max_dim over p in {2, 3, 5, 7}.
SuiteResult rank_suite(std::size_t count, std::uint64_t seed, std::size_t max_dim = 8);

/// Solvability against the augmented rank (prime moduli) and against the
/// enumerated row span (composite moduli, spans of at most 10^4 vectors).
SuiteResult solvability_suite(std::size_t prime_count, std::size_t composite_count, std::uint64_t seed);

/// canonize against canon_oracle on instances with at most 10^4 anchor tuples.
SuiteResult canon_oracle_suite(std::size_t count, std::uint64_t seed, const CanonOptions& opt = {});

/// Canonical bytes unchanged under admissible relabelings.
SuiteResult invariance_suite(std::size_t count, std::size_t relabelings, std::uint64_t seed);

/// Gadget graphs: twisted and untwisted forms differ, all twists agree, and
/// relabelings do not change the form.
SuiteResult cfi_suite(std::size_t relabelings, std::uint64_t seed);

/// Exhaustive structural checks of the labeling cosets on the four-cycle and two-pairs graphs
/// plus `count` small random instances. One result per property.
std::vector<SuiteResult> structural_suite(std::size_t count, std::uint64_t seed);

/// Canonization through the file format on instances with n <= 60, at most
/// 8 classes of size at most 8. Fails when one run exceeds `limit_seconds`.
SuiteResult scale_suite(std::size_t count, std::uint64_t seed, double limit_seconds);

/// Parse/serialize round trips, deterministic output and generator validity.
SuiteResult io_suite(std::size_t count, std::uint64_t seed);

}  // namespace pgc
