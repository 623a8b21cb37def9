#pragma once

#include <vector>

#include "subzeta/matrix.hpp"
#include "subzeta/partition.hpp"
#include "subzeta/poly.hpp"

namespace subzeta {

/// Companion matrix of a monic polynomial of degree >= 1: ones on the
/// superdiagonal, last row the negated coefficients a_0..a_{m-1}.
IntMatrix companion(const IntPoly& f);

/// diag(C(X^{l_1}), ..., C(X^{l_r})); the standard nilpotent matrix of type l.
IntMatrix n_of(const Partition& lambda);

/// The dual nilpotent normal form. Zero for at most one part; otherwise the
/// first l_1 rows carry an identity block 1_{l_2} in columns l_1..l_1+l_2-1
/// and the trailing block is a_of(lambda.tail()).
IntMatrix a_of(const Partition& lambda);

/// Cells of the Young diagram of lambda are numbered 1..n row by row
/// (horizontal order) and column by column (vertical order). The result maps
/// horizontal positions to vertical ones: sigma[h-1] = v. With Q the
/// permutation matrix having Q(sigma(h), h) = 1, Q^{-1} a_of(dual) Q = n_of.
std::vector<int> permutation_conjugator(const Partition& lambda);

/// The matrix Q described above, built from a 1-based permutation.
IntMatrix conjugator_matrix(const std::vector<int>& sigma);

}  // namespace subzeta
