#include "subzeta/campaign.hpp"

#include <algorithm>

namespace subzeta {

IntMatrix random_matrix(std::mt19937_64& rng, int min_n, int max_n, int max_entry) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  const auto n = static_cast<std::size_t>(size(rng));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = entry(rng);
  return m;
}

bool split_or_quadratic(const MatrixAnalysis& analysis) {
  return std::all_of(analysis.minpoly_factors.begin(), analysis.minpoly_factors.end(),
                     [](const Factor& f) { return f.poly.degree() <= 2; });
}

CampaignReport run_campaign(const CampaignOptions& options) {
  std::mt19937_64 rng(options.seed);
  CampaignReport report;
  while (static_cast<int>(report.cases.size()) < options.count) {
    IntMatrix a = random_matrix(rng, options.min_n, options.max_n, options.max_entry);
    const MatrixAnalysis analysis = analyze_matrix(a);
    if (!split_or_quadratic(analysis)) {
      ++report.rejected;
      continue;
    }
    BadPrimeSet bad = heuristic_bad_primes(analysis);
    CampaignCase c{a, {}};
    for (std::uint64_t p : bad.good_primes(options.primes_per_matrix)) {
      c.comparisons.push_back(compare(analysis, bad, p, options.max_exp, options.oracle));
      if (!c.comparisons.back().matches()) ++report.mismatches;
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace subzeta
