#pragma once

#include <cstdint>

#include "subzeta/matrix.hpp"
#include "subzeta/poly.hpp"

namespace subzeta {

IntMatrix matpow(const IntMatrix& a, unsigned k);
RatMatrix matpow(const RatMatrix& a, unsigned k);

/// f(A) by Horner's rule.
IntMatrix poly_at_matrix(const IntPoly& f, const IntMatrix& a);
RatMatrix poly_at_matrix(const IntPoly& f, const RatMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

int rank_over_Q(const IntMatrix& m);
int rank_over_Q(const RatMatrix& m);
/// Dimension of the (right) null space, cols - rank.
int kernel_dim(const IntMatrix& m);
int kernel_dim(const RatMatrix& m);

/// Rank of the reduction of m modulo the prime p.
int rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Reduced row echelon form over Q; `pivots` receives the pivot columns.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

/// Basis (as rows, in reduced echelon form) of { x : x M = 0 }.
RatMatrix left_kernel(const RatMatrix& m);

/// The unique X with X V = W, where V has full row rank and the rows of W
/// lie in the row space of V.
RatMatrix solve_left(const RatMatrix& v, const RatMatrix& w);

/// Characteristic polynomial det(X - A) (Faddeev-LeVerrier; all divisions
/// are exact).
IntPoly charpoly(const IntMatrix& a);

/// Minimal polynomial over Q: lcm of the Krylov-chain minimal polynomials of
/// the standard basis vectors. Monic with integer coefficients.
IntPoly minpoly(const IntMatrix& a);

/// Row Hermite normal form of an arbitrary integer matrix: the non-zero rows
/// of an echelon basis of the row lattice with positive pivots and entries
/// above each pivot reduced into [0, pivot).
IntMatrix row_hnf(const IntMatrix& m);

/// Hermite normal form of a square non-singular integer matrix (rows are
/// lattice generators): upper triangular, positive diagonal, H(i,j) in
/// [0, H(j,j)) for j > i.
IntMatrix hnf(const IntMatrix& m);

/// gcd of all r x r minors, r = rank(m); the product of the non-zero
/// invariant factors. 1 for the zero matrix.
Int determinantal_divisor(const IntMatrix& m);

}  // namespace subzeta
