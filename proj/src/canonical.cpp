#include "subzeta/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "subzeta/linalg.hpp"

namespace subzeta {

ElementaryDivisorVector::ElementaryDivisorVector(std::vector<EdvEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.poly.degree() < 1 || !e.poly.is_monic()) {
      throw std::invalid_argument("elementary divisor polynomials must be monic of degree >= 1");
    }
    if (e.partition.empty()) throw std::invalid_argument("elementary divisor partitions must be non-empty");
  }
  std::sort(entries_.begin(), entries_.end(), [](const EdvEntry& a, const EdvEntry& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.partition < b.partition;
  });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].poly == entries_[i - 1].poly) {
      throw std::invalid_argument("elementary divisor polynomials must be pairwise distinct");
    }
  }
}

int ElementaryDivisorVector::dimension() const {
  int n = 0;
  for (const auto& e : entries_) n += e.poly.degree() * e.partition.size();
  return n;
}

std::string ElementaryDivisorVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) s += ", ";
    s += "(" + entries_[i].poly.to_string() + ", " + entries_[i].partition.to_string() + ")";
  }
  return s + ")";
}

namespace {

// Dual partition from the kernel dimensions dim ker M^j, j = 0, 1, ...,
// divided by `unit`; stops once the dimension reaches `total`.
template <class Mat>
Partition type_from_kernels(const Mat& m, int total, int unit) {
  std::vector<int> dual_parts;
  Mat power = Mat::identity(m.rows());
  int prev = 0;
  for (int j = 1; prev < total; ++j) {
    power = power * m;
    const int dim = kernel_dim(power);
    const int jump = dim - prev;
    if (jump == 0) throw std::domain_error("matrix is not primary for the given polynomial");
    if (jump % unit != 0) throw std::domain_error("kernel dimension jump not divisible by deg f");
    dual_parts.push_back(jump / unit);
    prev = dim;
    if (j > total) throw std::domain_error("kernel dimensions failed to stabilise");
  }
  return Partition(std::move(dual_parts)).dual();
}

}  // namespace

Partition nilpotent_type(const IntMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("nilpotent_type expects a non-empty square matrix");
  if (!matpow(a, static_cast<unsigned>(a.rows())).is_zero()) throw std::domain_error("matrix is not nilpotent");
  return type_from_kernels(a, static_cast<int>(a.rows()), 1);
}

std::vector<PrimaryBlock> primary_decomposition(const IntMatrix& a, const std::vector<Factor>& factored_minpoly) {
  IntPoly product = IntPoly::constant(Int(1));
  for (const auto& f : factored_minpoly) product *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
  if (product != minpoly(a)) throw std::invalid_argument("factorization does not multiply to the minimal polynomial");
  const RatMatrix ra = to_rat(a);
  std::vector<PrimaryBlock> blocks;
  for (const auto& f : factored_minpoly) {
    const IntPoly power = f.poly.pow(static_cast<unsigned>(f.multiplicity));
    RatMatrix basis = left_kernel(to_rat(poly_at_matrix(power, a)));
    RatMatrix restricted = solve_left(basis, basis * ra);
    blocks.push_back({f.poly, f.multiplicity, std::move(basis), std::move(restricted)});
  }
  return blocks;
}

Partition primary_type(const RatMatrix& a, const IntPoly& f) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("primary_type expects a non-empty square matrix");
  return type_from_kernels(poly_at_matrix(f, a), static_cast<int>(a.rows()), f.degree());
}

MatrixAnalysis analyze_matrix(const IntMatrix& a, int degree_cap) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("expected a square matrix of size n >= 1");
  MatrixAnalysis out;
  out.matrix = a;
  out.minimal_polynomial = minpoly(a);
  out.minpoly_factors = factor_over_Z(out.minimal_polynomial, degree_cap);
  out.blocks = primary_decomposition(a, out.minpoly_factors);
  std::vector<EdvEntry> entries;
  for (const auto& b : out.blocks) entries.push_back({b.poly, primary_type(b.restricted, b.poly)});
  out.edv = ElementaryDivisorVector(std::move(entries));
  return out;
}

ElementaryDivisorVector elementary_divisor_vector(const IntMatrix& a, int degree_cap) {
  return analyze_matrix(a, degree_cap).edv;
}

}  // namespace subzeta
