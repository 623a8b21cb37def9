#include "subzeta/linalg.hpp"

#include <stdexcept>

namespace subzeta {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw std::invalid_argument("block_diag expects square blocks");
    n += b.rows();
  }
  IntMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

namespace {

template <class T>
Matrix<T> matpow_impl(const Matrix<T>& a, unsigned k) {
  if (!a.is_square()) throw std::invalid_argument("matrix power needs a square matrix");
  Matrix<T> r = Matrix<T>::identity(a.rows());
  Matrix<T> b = a;
  while (k > 0) {
    if (k & 1U) r = r * b;
    k >>= 1U;
    if (k > 0) b = b * b;
  }
  return r;
}

template <class T>
Matrix<T> horner(const IntPoly& f, const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  const std::size_t n = a.rows();
  Matrix<T> acc(n, n);
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a;
    const Int& c = f.coeffs()[static_cast<std::size_t>(i)];
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += T(c);
  }
  return acc;
}

// In-place Bareiss elimination; returns the rank. For square input the last
// pivot is the determinant up to the sign recorded in `sign`.
int bareiss(IntMatrix& m, int* sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Int prev = 1;
  std::size_t r = 0;
  int s = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      s = -s;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (sign != nullptr) *sign = s;
  return static_cast<int>(r);
}

}  // namespace

IntMatrix matpow(const IntMatrix& a, unsigned k) { return matpow_impl(a, k); }
RatMatrix matpow(const RatMatrix& a, unsigned k) { return matpow_impl(a, k); }

IntMatrix poly_at_matrix(const IntPoly& f, const IntMatrix& a) { return horner(f, a); }
RatMatrix poly_at_matrix(const IntPoly& f, const RatMatrix& a) { return horner(f, a); }

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix w = m;
  int sign = 1;
  const int r = bareiss(w, &sign);
  if (r < static_cast<int>(m.rows())) return 0;
  return sign * w(m.rows() - 1, m.cols() - 1);
}

int rank_over_Q(const IntMatrix& m) {
  IntMatrix w = m;
  return bareiss(w, nullptr);
}

int rank_over_Q(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

int kernel_dim(const IntMatrix& m) { return static_cast<int>(m.cols()) - rank_over_Q(m); }
int kernel_dim(const RatMatrix& m) { return static_cast<int>(m.cols()) - rank_over_Q(m); }

int rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  using u128 = unsigned __int128;
  std::vector<std::uint64_t> a(rows * cols);
  Int pp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Int v = m(i, j) % pp;
      if (v < 0) v += pp;
      a[i * cols + j] = v.get_ui();
    }
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1U) r = static_cast<std::uint64_t>(static_cast<u128>(r) * x % p);
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % p);
      e >>= 1U;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint64_t iv = inv(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = static_cast<std::uint64_t>(static_cast<u128>(a[i * cols + c]) * iv % p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = static_cast<std::uint64_t>(static_cast<u128>(f) * a[r * cols + j] % p);
        a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> piv_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    piv_cols.push_back(c);
    ++r;
  }
  if (pivots != nullptr) *pivots = std::move(piv_cols);
  return m;
}

RatMatrix left_kernel(const RatMatrix& m) {
  // x M = 0  <=>  M^T x^T = 0
  const RatMatrix t = m.transpose();
  std::vector<std::size_t> piv;
  const RatMatrix e = rref(t, &piv);
  const std::size_t n = t.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -e(k, free);
    basis.push_back(std::move(v));
  }
  RatMatrix out(basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = basis[i][j];
  return rref(out);
}

RatMatrix solve_left(const RatMatrix& v, const RatMatrix& w) {
  if (v.cols() != w.cols()) throw std::invalid_argument("solve_left dimension mismatch");
  // V^T X^T = W^T, solved on the augmented matrix [V^T | W^T].
  const std::size_t k = v.rows();
  const std::size_t n = v.cols();
  const std::size_t r = w.rows();
  RatMatrix aug(n, k + r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = v(j, i);
    for (std::size_t j = 0; j < r; ++j) aug(i, k + j) = w(j, i);
  }
  std::vector<std::size_t> piv;
  const RatMatrix e = rref(aug, &piv);
  if (piv.size() != k || (!piv.empty() && piv.back() >= k)) {
    throw std::domain_error("solve_left: V lacks full row rank or W is outside its row space");
  }
  RatMatrix x(r, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) x(j, i) = e(i, k + j);
  return x;
}

IntPoly charpoly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t d = 0; d < n; ++d) m(d, d) += c[n - k + 1];
    const IntMatrix am = a * m;
    Int tr = 0;
    for (std::size_t d = 0; d < n; ++d) tr += am(d, d);
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

IntPoly minpoly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const RatMatrix ra = to_rat(a);
  RatPoly result = RatPoly::constant(Rat(1));
  for (std::size_t b = 0; b < n; ++b) {
    // chain v, vA, vA^2, ... kept alongside an echelon form that records how
    // each reduced vector is expressed in terms of the chain.
    std::vector<std::vector<Rat>> echelon;   // reduced vectors
    std::vector<std::size_t> lead;           // leading column of each
    std::vector<std::vector<Rat>> combo;     // chain coefficients of each
    std::vector<Rat> v(n, Rat(0));
    v[b] = 1;
    for (std::size_t k = 0;; ++k) {
      std::vector<Rat> red = v;
      std::vector<Rat> coef(k + 1, Rat(0));
      coef[k] = 1;
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        const Rat f = red[lead[e]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n; ++j) red[j] -= f * echelon[e][j];
        for (std::size_t j = 0; j < combo[e].size(); ++j) coef[j] -= f * combo[e][j];
      }
      std::size_t lc = 0;
      while (lc < n && red[lc] == 0) ++lc;
      if (lc == n) {
        // coef . (v_0..v_k) = 0 with coef[k] = 1
        result = lcm(result, RatPoly(coef));
        break;
      }
      const Rat inv = 1 / red[lc];
      for (auto& x : red) x *= inv;
      for (auto& x : coef) x *= inv;
      // keep the echelon basis fully reduced on leading columns
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        const Rat f = echelon[e][lc];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n; ++j) echelon[e][j] -= f * red[j];
        combo[e].resize(coef.size(), Rat(0));
        for (std::size_t j = 0; j < coef.size(); ++j) combo[e][j] -= f * coef[j];
      }
      echelon.push_back(std::move(red));
      lead.push_back(lc);
      combo.push_back(std::move(coef));
      std::vector<Rat> next(n, Rat(0));
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[j] += v[i] * ra(i, j);
      }
      v = std::move(next);
    }
  }
  return to_int(result);
}

IntMatrix row_hnf(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t r = 0;
  Int g, s, t, a_g, b_g;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      const Int a = h(r, c);
      const Int b = h(i, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_divexact(a_g.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b_g.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      for (std::size_t j = c; j < cols; ++j) {
        const Int x = h(r, j);
        const Int y = h(i, j);
        h(r, j) = s * x + t * y;
        h(i, j) = a_g * y - b_g * x;
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = c; j < cols; ++j) h(r, j) = -h(r, j);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(k, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) h(k, j) -= q * h(r, j);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = h(i, j);
  return out;
}

IntMatrix hnf(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hnf expects a square matrix");
  IntMatrix h = row_hnf(m);
  if (h.rows() != m.rows()) throw std::domain_error("hnf of a singular matrix");
  return h;
}

Int determinantal_divisor(const IntMatrix& m) {
  const IntMatrix h = row_hnf(m);
  if (h.rows() == 0) return 1;
  const IntMatrix c = row_hnf(h.transpose());
  Int d = 1;
  for (std::size_t i = 0; i < c.rows(); ++i) d *= c(i, i);
  return abs(d);
}

}  // namespace subzeta
