#include "subzeta/normal_forms.hpp"

#include <stdexcept>

namespace subzeta {

IntMatrix companion(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("companion matrix of a constant polynomial");
  if (!f.is_monic()) throw std::invalid_argument("companion matrix of a non-monic polynomial");
  const auto m = static_cast<std::size_t>(f.degree());
  IntMatrix c(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < m; ++j) c(m - 1, j) = -f.coeffs()[j];
  return c;
}

IntMatrix n_of(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("N(lambda) of the empty partition");
  std::vector<IntMatrix> blocks;
  for (int part : lambda.parts()) blocks.push_back(companion(IntPoly::monomial(part)));
  return block_diag(blocks);
}

IntMatrix a_of(const Partition& lambda) {
  const auto n = static_cast<std::size_t>(lambda.size());
  IntMatrix a(n, n);
  if (lambda.length() <= 1) return a;
  const auto l1 = static_cast<std::size_t>(lambda[0]);
  const auto l2 = static_cast<std::size_t>(lambda[1]);
  for (std::size_t i = 0; i < l2; ++i) a(i, l1 + i) = 1;
  const IntMatrix rest = a_of(lambda.tail());
  for (std::size_t i = 0; i < rest.rows(); ++i)
    for (std::size_t j = 0; j < rest.cols(); ++j) a(l1 + i, l1 + j) = rest(i, j);
  return a;
}

std::vector<int> permutation_conjugator(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("permutation conjugator of the empty partition");
  const Partition cols = lambda.dual();
  // vertical index of cell (row, col): cells in earlier columns, then row
  std::vector<int> col_start(static_cast<std::size_t>(cols.length()) + 1, 0);
  for (int c = 0; c < cols.length(); ++c) col_start[static_cast<std::size_t>(c) + 1] = col_start[static_cast<std::size_t>(c)] + cols[static_cast<std::size_t>(c)];
  std::vector<int> sigma;
  sigma.reserve(static_cast<std::size_t>(lambda.size()));
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) {
      sigma.push_back(col_start[static_cast<std::size_t>(c)] + r + 1);
    }
  }
  return sigma;
}

IntMatrix conjugator_matrix(const std::vector<int>& sigma) {
  const std::size_t n = sigma.size();
  IntMatrix q(n, n);
  for (std::size_t h = 0; h < n; ++h) q(static_cast<std::size_t>(sigma[h] - 1), h) = 1;
  return q;
}

}  // namespace subzeta
