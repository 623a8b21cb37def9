#pragma once

// Polynomial arithmetic over the prime field F_p. Polynomials are coefficient
// vectors, lowest degree first, always trimmed.

#include <cstdint>
#include <utility>
#include <vector>

#include "subzeta/poly.hpp"

namespace subzeta::fp {

using Elem = std::uint64_t;
using Vec = std::vector<Elem>;

class Field {
 public:
  explicit Field(std::uint64_t p);
  std::uint64_t p() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const { return a + b >= p_ ? a + b - p_ : a + b; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem reduce(const Int& v) const;

  Vec from_int(const IntPoly& f) const;
  /// Lifts to integer coefficients in [0, p).
  IntPoly to_int(const Vec& f) const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec scale(const Vec& a, Elem s) const;
  std::pair<Vec, Vec> divrem(const Vec& a, const Vec& b) const;
  Vec rem(const Vec& a, const Vec& b) const { return divrem(a, b).second; }
  Vec monic(const Vec& a) const;
  Vec gcd(Vec a, Vec b) const;
  /// Returns (g, s, t) with s a + t b = g, g monic.
  std::tuple<Vec, Vec, Vec> gcdext(const Vec& a, const Vec& b) const;
  Vec derivative(const Vec& a) const;
  /// base^e mod m.
  Vec powmod(Vec base, std::uint64_t e, const Vec& m) const;

 private:
  std::uint64_t p_;
};

void trim(Vec& v);
inline int degree(const Vec& v) { return static_cast<int>(v.size()) - 1; }

/// Full factorization of a monic squarefree polynomial over F_p by
/// Berlekamp's algorithm (deterministic). Factors are monic.
std::vector<Vec> berlekamp(const Field& field, const Vec& f);

/// Number of irreducible factors of a monic squarefree polynomial
/// (dimension of the Berlekamp subalgebra).
int berlekamp_count(const Field& field, const Vec& f);

}  // namespace subzeta::fp
