#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "subzeta/analysis.hpp"

namespace subzeta {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct CampaignOptions {
  int count = 50;
  /// 1 x 1 matrices only ever give zeta(s), so they are skipped by default.
  int min_n = 2;
  int max_n = 3;
  int max_entry = 4;
  std::size_t primes_per_matrix = 3;
  int max_exp = 3;
  std::uint64_t seed = kDefaultSeed;
  OracleOptions oracle;
};

struct CampaignCase {
  IntMatrix matrix;
  std::vector<ComparisonReport> comparisons;
};

struct CampaignReport {
  std::vector<CampaignCase> cases;
  int mismatches = 0;
  /// Random draws discarded for having an irreducible factor of degree > 2.
  int rejected = 0;
};

/// Square matrix of size in [min_n, max_n] with entries in [-max_entry, max_entry].
IntMatrix random_matrix(std::mt19937_64& rng, int min_n, int max_n, int max_entry);

/// True when every irreducible factor of the minimal polynomial is linear
/// or quadratic.
bool split_or_quadratic(const MatrixAnalysis& analysis);

/// Draws matrices until `count` pass split_or_quadratic and compares formula
/// and oracle at the first heuristically good primes of each.
CampaignReport run_campaign(const CampaignOptions& options);

}  // namespace subzeta
