#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace subzeta {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic primality test for 64-bit integers (Miller-Rabin with the
/// 12 smallest prime bases, which is exact below 3.3e24).
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// The first `count` primes p with p > after.
std::vector<std::uint64_t> primes_after(std::uint64_t after, std::size_t count);

/// Integer power with an unsigned exponent.
Int ipow(const Int& base, unsigned long exp);

/// Result of trial division: prime factors found (with multiplicity folded
/// away) and the remaining cofactor, which is 1, a prime, or a composite whose
/// prime factors all exceed the trial bound.
struct PartialFactorization {
  std::vector<std::uint64_t> primes;
  Int cofactor{1};
};

/// Distinct prime divisors of |n| up to `trial_bound`; n = 0 yields no
/// primes and a zero cofactor.
PartialFactorization distinct_prime_divisors(const Int& n, std::uint64_t trial_bound = 1000000);

/// Converts an Int known to fit into a signed 64-bit value.
std::int64_t to_i64(const Int& v);

inline std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v);

}  // namespace subzeta
