#include "subzeta/bad_primes.hpp"

#include "subzeta/canonical.hpp"
#include "subzeta/linalg.hpp"

namespace subzeta {

void BadPrimeSet::add(std::uint64_t p, const std::string& reason) { primes_[p].insert(reason); }

void BadPrimeSet::add_divisors(const Int& n, const std::string& reason) {
  if (n == 0) throw std::invalid_argument("cannot flag the divisors of zero");
  const auto pf = distinct_prime_divisors(n);
  for (auto p : pf.primes) add(p, reason);
  if (pf.cofactor > 1) unfactored_.push_back({pf.cofactor, reason});
}

void BadPrimeSet::add_all_up_to(std::uint64_t bound, const std::string& reason) {
  for (std::uint64_t p = 2; p <= bound; p = next_prime(p)) add(p, reason);
}

bool BadPrimeSet::contains(std::uint64_t p) const {
  if (primes_.count(p) != 0U) return true;
  for (const auto& w : unfactored_) {
    if (mpz_divisible_ui_p(w.value.get_mpz_t(), p) != 0) return true;
  }
  return false;
}

std::vector<std::string> BadPrimeSet::reasons(std::uint64_t p) const {
  std::vector<std::string> out;
  if (auto it = primes_.find(p); it != primes_.end()) out.assign(it->second.begin(), it->second.end());
  for (const auto& w : unfactored_) {
    if (mpz_divisible_ui_p(w.value.get_mpz_t(), p) != 0) out.push_back(w.reason);
  }
  return out;
}

std::vector<std::uint64_t> BadPrimeSet::good_primes(std::size_t count) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; out.size() < count; p = next_prime(p)) {
    if (!contains(p)) out.push_back(p);
  }
  return out;
}

BadPrimeSet heuristic_bad_primes(const ElementaryDivisorVector& edv) {
  BadPrimeSet bad;
  const auto& e = edv.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].poly.degree() > 1) {
      bad.add_divisors(discriminant(e[i].poly), "ramified: " + e[i].poly.to_string() + " not squarefree mod p");
    }
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Int r = resultant(e[i].poly, e[j].poly);
      bad.add_divisors(r, "resultant of " + e[i].poly.to_string() + " and " + e[j].poly.to_string());
    }
  }
  bad.add_all_up_to(static_cast<std::uint64_t>(edv.dimension()), "p <= n");
  return bad;
}

namespace {

void add_denominators(BadPrimeSet& bad, const RatMatrix& m, const std::string& reason) {
  Int lcm_den = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(i, j).get_den_mpz_t());
  if (lcm_den > 1) bad.add_divisors(lcm_den, reason);
}

}  // namespace

BadPrimeSet heuristic_bad_primes(const MatrixAnalysis& analysis) {
  BadPrimeSet bad = heuristic_bad_primes(analysis.edv);
  for (const auto& block : analysis.blocks) {
    const std::string tag = block.poly.to_string();
    add_denominators(bad, block.basis, "denominator in the primary basis for " + tag);
    add_denominators(bad, block.restricted, "denominator in the primary block for " + tag);
    const IntMatrix fa = poly_at_matrix(block.poly, analysis.matrix);
    IntMatrix power = IntMatrix::identity(fa.rows());
    for (int j = 1; j <= block.multiplicity; ++j) {
      power = power * fa;
      const Int d = determinantal_divisor(power);
      if (d > 1) {
        bad.add_divisors(d, "rank of f(A)^" + std::to_string(j) + " drops mod p, f = " + tag);
      }
    }
  }
  return bad;
}

}  // namespace subzeta
