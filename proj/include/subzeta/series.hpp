#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subzeta/arith.hpp"
#include "subzeta/poly.hpp"

namespace subzeta {

/// A formal product of binomials (1 - X^a Y^b)^e with a >= 0, b >= 1 and
/// e != 0, kept canonical: sorted by (a, b), merged, zero exponents dropped.
/// X stands for the residue field size q and Y for q^{-s}. Since these
/// binomials are multiplicatively independent, two products are equal as
/// rational functions exactly when their canonical factor lists agree.
class BinomialProduct {
 public:
  struct Factor {
    int a;  // exponent of X
    int b;  // exponent of Y
    int e;  // multiplicity
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  BinomialProduct() = default;
  explicit BinomialProduct(const std::vector<Factor>& factors);

  /// Multiplies in (1 - X^a Y^b)^e.
  void multiply(int a, int b, int e);

  std::vector<Factor> factors() const;
  bool empty() const noexcept { return exps_.empty(); }
  /// Number of distinct binomials.
  std::size_t size() const noexcept { return exps_.size(); }

  BinomialProduct inverse() const;
  friend BinomialProduct operator*(const BinomialProduct& x, const BinomialProduct& y);
  friend bool operator==(const BinomialProduct&, const BinomialProduct&) = default;

  /// e.g. "(1 - t)^-1 (1 - q t^2)^-1"; "1" for the empty product.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, int> exps_;
};

/// Polynomial in X and Y with integer coefficients.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  static BivariatePoly constant(const Int& c);
  static BivariatePoly monomial(const Int& c, int x_exp, int y_exp);

  void add_term(const Int& c, int x_exp, int y_exp);
  const std::map<std::pair<int, int>, Int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int y_degree() const;

  /// Coefficient of Y^k as a polynomial in X.
  IntPoly y_coeff(int k) const;

  friend BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q);
  friend BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q);
  friend BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  Int evaluate(const Int& x, const Int& y) const;
  Rat evaluate(const Rat& x, const Rat& y) const;

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Int> terms_;
};

/// numerator / denominator in Q(X, Y).
struct BivariateRational {
  BivariatePoly numerator;
  BivariatePoly denominator;
  /// Exact quotient when the denominator divides the numerator (as
  /// polynomials in Y over Z[X] with unit leading behaviour); otherwise
  /// std::nullopt-like failure reported by throwing std::domain_error.
  BivariatePoly exact_quotient() const;
};

/// Truncated power series in Y with coefficients in Z[X]: entry k is the
/// coefficient of Y^k.
using YSeries = std::vector<IntPoly>;

/// Expansion of a binomial product up to and including Y^max_exp.
YSeries expand(const BinomialProduct& f, int max_exp);

/// Expansion of num / den where den has Y-constant term 1.
YSeries expand(const BivariateRational& f, int max_exp);

/// Multiplies a truncated series by a binomial product.
YSeries multiply(YSeries s, const BinomialProduct& f);

/// Coefficients a_{p^0}, ..., a_{p^E} of a local Dirichlet series at a fixed
/// prime.
struct DirichletCoefficients {
  std::uint64_t prime = 0;
  std::vector<Int> values;
  friend bool operator==(const DirichletCoefficients&, const DirichletCoefficients&) = default;
};

/// Evaluates a truncated series at X = p.
DirichletCoefficients evaluate_at(const YSeries& s, std::uint64_t p);

/// Expands F as a series in Y over Z[X], truncates after Y^E and sets X = p.
DirichletCoefficients dirichlet_coefficients(const BinomialProduct& f, std::uint64_t p, int max_exp);

}  // namespace subzeta
