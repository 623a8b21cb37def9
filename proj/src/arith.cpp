#include "subzeta/arith.hpp"

#include <stdexcept>

namespace subzeta {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint64_t> primes_after(std::uint64_t after, std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::uint64_t p = after;
  while (out.size() < count) {
    p = next_prime(p);
    out.push_back(p);
  }
  return out;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

PartialFactorization distinct_prime_divisors(const Int& n, std::uint64_t trial_bound) {
  PartialFactorization out;
  Int m = abs(n);
  if (m == 0) {
    out.cofactor = 0;
    return out;
  }
  for (std::uint64_t p = 2; p <= trial_bound; p = (p == 2 ? 3 : p + 2)) {
    if (m == 1) break;
    if (Int(p) * Int(p) > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      out.primes.push_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      }
    }
  }
  if (m > 1 && m.fits_ulong_p() && is_prime(m.get_ui())) {
    out.primes.push_back(m.get_ui());
    m = 1;
  }
  out.cofactor = m;
  return out;
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit into 64 bits");
  return v.get_si();
}

std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace subzeta
