#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subzeta/bad_primes.hpp"
#include "subzeta/canonical.hpp"
#include "subzeta/matrix.hpp"
#include "subzeta/series.hpp"

namespace subzeta {

struct OracleOptions {
  int max_n = 4;
  /// Refuse enumerations visiting more candidate HNF matrices than this.
  std::uint64_t budget = 2'000'000'000ULL;
  /// Reject partial bases row by row instead of testing complete ones.
  bool prune = false;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct OracleStats {
  DirichletCoefficients counts;
  /// Candidates tested for each index exponent e (complete bases when
  /// unpruned, partial ones as well when pruning).
  std::vector<std::uint64_t> visited;
};

/// Number of HNF candidates of index p^e for e = 0..E: the sum over
/// compositions (e_1..e_n) of e of prod_{i<j} p^{e_j}.
std::vector<Int> hnf_candidate_counts(int n, std::uint64_t p, int max_exp);

/// Counts the A-invariant sublattices of Z^n of index p^e, e = 0..E, by
/// testing every upper-triangular HNF basis B with diagonal p^{e_i} for
/// B A B^{-1} integral. Throws BudgetExceeded when n or the candidate count
/// exceeds the options.
OracleStats count_invariant_sublattices_stats(const IntMatrix& a, std::uint64_t p, int max_exp,
                                              const OracleOptions& options = {});
DirichletCoefficients count_invariant_sublattices(const IntMatrix& a, std::uint64_t p, int max_exp,
                                                  const OracleOptions& options = {});

struct ComparisonReport {
  std::uint64_t prime = 0;
  int max_exp = 0;
  /// Generic Euler factor; absent when some f_i is ramified at the prime.
  std::optional<BinomialProduct> formula_factor;
  std::vector<Int> formula;
  std::vector<Int> oracle;
  std::optional<int> first_mismatch;
  bool heuristically_bad = false;
  std::vector<std::string> bad_reasons;
  /// The prime passed the heuristic but the counts disagree.
  bool demoted = false;

  bool matches() const noexcept { return !first_mismatch.has_value(); }
};

/// Formula coefficients from the generic Euler factor against oracle counts.
/// A mismatch at a heuristically good prime adds the prime to `bad` with an
/// explanatory reason and sets `demoted`.
ComparisonReport compare(const MatrixAnalysis& analysis, BadPrimeSet& bad, std::uint64_t p, int max_exp,
                         const OracleOptions& options = {});

/// Convenience overload running the full analysis and heuristic itself.
ComparisonReport compare(const IntMatrix& a, std::uint64_t p, int max_exp, const OracleOptions& options = {});

/// Index of the first differing entry, or none if the sequences are equal.
std::optional<int> first_mismatch(const std::vector<Int>& x, const std::vector<Int>& y);

}  // namespace subzeta
