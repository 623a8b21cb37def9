#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subzeta/poly.hpp"

namespace subzeta {

inline constexpr int kDefaultDegreeCap = 24;

struct Factor {
  IntPoly poly;
  int multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Squarefree decomposition of a monic integer polynomial: pairwise coprime
/// monic squarefree parts with the multiplicity at which each occurs.
std::vector<Factor> squarefree_decomposition(const IntPoly& f);

/// Irreducible factorization over Q of a monic integer polynomial. Each
/// squarefree part is factored modulo a small prime (Berlekamp), lifted
/// p-adically past a coefficient bound (Hensel), and recombined by subset
/// search. Factors are monic, sorted canonically.
/// Throws DegreeCapExceeded when deg f > degree_cap and std::invalid_argument
/// for non-monic or constant input.
std::vector<Factor> factor_over_Z(const IntPoly& f, int degree_cap = kDefaultDegreeCap);

/// Residue degrees of the places above p in Q[X]/(f), read off from the
/// distinct-degree factorization of f mod p. When f mod p is not squarefree
/// the profile is flagged ramified and carries no degrees.
struct SplittingProfile {
  std::uint64_t prime = 0;
  std::vector<int> degrees;  // ascending
  bool ramified = false;

  int places() const noexcept { return static_cast<int>(degrees.size()); }
  std::string to_string() const;
};

SplittingProfile splitting_profile(const IntPoly& f, std::uint64_t p);

}  // namespace subzeta
