#pragma once

#include <random>

#include "subzeta/linalg.hpp"
#include "subzeta/matrix.hpp"

namespace subzeta::testing {

inline constexpr std::uint64_t kSeed = 12345;

/// Product of random elementary row operations: determinant +-1, entries
/// of modest size.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int max_entry = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-1, 1);
  for (;;) {
    IntMatrix p = IntMatrix::identity(n);
    for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
      const std::size_t i = pick(rng), k = pick(rng);
      if (i == k) continue;
      const int c = coeff(rng);
      for (std::size_t col = 0; col < n; ++col) p(i, col) += c * p(k, col);
    }
    bool small = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) small = small && abs(p(i, k)) <= max_entry;
    if (small) return p;
  }
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& p) {
  const RatMatrix inv = solve_left(to_rat(p), RatMatrix::identity(p.rows()));
  IntMatrix out(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t k = 0; k < p.cols(); ++k) out(i, k) = inv(i, k).get_num();
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = entry(rng);
  return m;
}

}  // namespace subzeta::testing
