#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "subzeta/arith.hpp"

namespace subzeta {

class ElementaryDivisorVector;
struct MatrixAnalysis;

/// Primes at which the generic local formula is not trusted, each with the
/// reasons it was flagged. Some criteria produce integers that could not be
/// fully factored; those are kept as witnesses and consulted by contains().
class BadPrimeSet {
 public:
  struct Witness {
    Int value;
    std::string reason;
  };

  void add(std::uint64_t p, const std::string& reason);
  /// Flags every prime divisor of n (n != 0) with the given reason.
  void add_divisors(const Int& n, const std::string& reason);
  /// Flags all primes <= bound.
  void add_all_up_to(std::uint64_t bound, const std::string& reason);

  bool contains(std::uint64_t p) const;
  const std::map<std::uint64_t, std::set<std::string>>& primes() const noexcept { return primes_; }
  const std::vector<Witness>& unfactored() const noexcept { return unfactored_; }
  std::vector<std::string> reasons(std::uint64_t p) const;

  /// The first `count` primes outside the set.
  std::vector<std::uint64_t> good_primes(std::size_t count) const;

 private:
  std::map<std::uint64_t, std::set<std::string>> primes_;
  std::vector<Witness> unfactored_;
};

/// Heuristic from the vector alone: f_i not squarefree mod p, p dividing a
/// pairwise resultant, and p <= n.
BadPrimeSet heuristic_bad_primes(const ElementaryDivisorVector& edv);

/// Adds the matrix-level criteria: denominators in the primary-block bases
/// and restricted matrices, and primes where some f_i(A)^j loses rank mod p
/// (so A is not locally similar to its normal form).
BadPrimeSet heuristic_bad_primes(const MatrixAnalysis& analysis);

}  // namespace subzeta
