#pragma once

#include <string>
#include <vector>

#include "subzeta/matrix.hpp"
#include "subzeta/partition.hpp"
#include "subzeta/poly.hpp"
#include "subzeta/polyfactor.hpp"

namespace subzeta {

struct EdvEntry {
  IntPoly poly;         // monic irreducible over Q
  Partition partition;  // type of the poly-primary part, |partition| > 0
  friend bool operator==(const EdvEntry&, const EdvEntry&) = default;
};

/// Elementary divisor vector ((f_1, l_1), ..., (f_e, l_e)) of a matrix over Q,
/// stored in canonical order (by degree of f, then coefficients) so that two
/// similar matrices give identical vectors.
class ElementaryDivisorVector {
 public:
  ElementaryDivisorVector() = default;
  /// Validates (monic, degree >= 1, non-empty partitions, distinct
  /// polynomials) and sorts. Irreducibility is the caller's responsibility.
  explicit ElementaryDivisorVector(std::vector<EdvEntry> entries);

  const std::vector<EdvEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const EdvEntry& operator[](std::size_t i) const { return entries_.at(i); }

  /// Sum of deg(f_i) * |l_i|: the size of the matrix.
  int dimension() const;

  std::string to_string() const;
  friend bool operator==(const ElementaryDivisorVector&, const ElementaryDivisorVector&) = default;

 private:
  std::vector<EdvEntry> entries_;
};

/// Type of a nilpotent matrix from the kernel dimensions of its powers.
/// Throws std::domain_error when A is not nilpotent.
Partition nilpotent_type(const IntMatrix& a);

struct PrimaryBlock {
  IntPoly poly;        // irreducible factor f of the minimal polynomial
  int multiplicity;    // its multiplicity m in the minimal polynomial
  RatMatrix basis;     // rows: a basis of { x : x f(A)^m = 0 }
  RatMatrix restricted;  // matrix of x -> xA in that basis
};

/// Splits Q^n into the kernels of f_i^{m_i}(A) for the given factorization of
/// the minimal polynomial. Throws std::invalid_argument when the factors do
/// not multiply to minpoly(A).
std::vector<PrimaryBlock> primary_decomposition(const IntMatrix& a, const std::vector<Factor>& factored_minpoly);

/// Type of a matrix whose minimal polynomial is a power of the irreducible f:
/// kernel-dimension jumps of f(A)^j, divided by deg f, give the dual.
Partition primary_type(const RatMatrix& a, const IntPoly& f);

/// Everything learned about a matrix on the way to its elementary divisor
/// vector; kept so that the bad-prime analysis can inspect the blocks.
struct MatrixAnalysis {
  IntMatrix matrix;
  IntPoly minimal_polynomial;
  std::vector<Factor> minpoly_factors;
  std::vector<PrimaryBlock> blocks;
  ElementaryDivisorVector edv;
};

MatrixAnalysis analyze_matrix(const IntMatrix& a, int degree_cap = kDefaultDegreeCap);

ElementaryDivisorVector elementary_divisor_vector(const IntMatrix& a, int degree_cap = kDefaultDegreeCap);

}  // namespace subzeta
