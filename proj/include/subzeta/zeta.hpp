#pragma once

#include <cstdint>
#include <vector>

#include "subzeta/bad_primes.hpp"
#include "subzeta/canonical.hpp"
#include "subzeta/partition.hpp"
#include "subzeta/polyfactor.hpp"
#include "subzeta/series.hpp"

namespace subzeta {

/// W_lambda(X, Y) = prod_{j=1}^{n} (1 - X^{j-1} Y^{ind_lambda(j)})^{-1}: the
/// local zeta function of N(lambda^*) over a p-adic ring with X = q,
/// Y = q^{-s}.
BinomialProduct w_lambda(const Partition& lambda);

/// Generic Euler factor at p: for every entry (f, l), every place above p of
/// residue degree d and every 1 <= j <= |l|, a factor
/// (1 - X^{d(j-1)} Y^{d ind_{l^*}(j)})^{-1}. Throws BadPrimeError when some f
/// is ramified at p; the matrix-level bad-prime heuristic is not consulted.
BinomialProduct local_euler_factor(const ElementaryDivisorVector& edv, std::uint64_t p);

/// zeta_{o}(scale * s - shift) for the ring of integers o of Q[X]/(poly).
struct DedekindFactor {
  IntPoly field_poly;
  int scale = 1;
  int shift = 0;
  friend bool operator==(const DedekindFactor&, const DedekindFactor&) = default;
};

/// Product of shifted Dedekind zeta factors, valid away from bad_primes.
struct GlobalZetaExpression {
  std::vector<DedekindFactor> dedekind_factors;
  BadPrimeSet bad_primes;
};

GlobalZetaExpression global_formula(const ElementaryDivisorVector& edv, BadPrimeSet bad_primes);

struct Abscissa {
  int alpha = 0;  // abscissa of convergence
  int beta = 0;   // order of the pole there
  friend bool operator==(const Abscissa&, const Abscissa&) = default;
};

/// alpha = max length of the l_i; beta = sum of the smallest parts of the
/// l_i attaining that length.
Abscissa abscissa(const ElementaryDivisorVector& edv);

/// Largest real pole of prod zeta(b s - a) over the factors of a pure
/// denominator product: max (a + 1) / b. Throws std::domain_error when some
/// exponent is positive.
Rat abscissa_from_factors(const BinomialProduct& f);

/// Exponents of the local functional equation under q -> q^{-1}:
/// Z(1/X, 1/Y) = (-1)^sign_exponent X^q_exponent Y^s_exponent Z(X, Y).
struct FunctionalEquationData {
  long sign_exponent = 0;
  long q_exponent = 0;
  long s_exponent = 0;
  friend bool operator==(const FunctionalEquationData&, const FunctionalEquationData&) = default;
};

/// `profiles[i]` is the splitting profile of edv[i].poly at the chosen prime.
/// Throws BadPrimeError if any profile is ramified.
FunctionalEquationData functional_equation_data(const ElementaryDivisorVector& edv,
                                                const std::vector<SplittingProfile>& profiles);
FunctionalEquationData functional_equation_data(const ElementaryDivisorVector& edv, std::uint64_t p);

/// The result of substituting (X, Y) -> (1/X, 1/Y) in a binomial product,
/// written as sign * X^x_exp * Y^y_exp * rest.
struct InvertedProduct {
  int sign = 1;
  long x_exp = 0;
  long y_exp = 0;
  BinomialProduct rest;
};

/// Inverts every binomial via 1 - X^{-a} Y^{-b} = -X^{-a} Y^{-b} (1 - X^a Y^b).
InvertedProduct invert_residue_field(const BinomialProduct& f);

/// True iff F(1/X, 1/Y) = (-1)^sign X^q Y^s F(X, Y) with the exponents of
/// `data` (the sign compared modulo 2).
bool verify_functional_equation(const BinomialProduct& f, const FunctionalEquationData& data);

/// Simple pole at s = 0 for almost all local factors: exactly one entry and
/// its polynomial is linear.
bool has_simple_pole_at_zero(const ElementaryDivisorVector& edv);

/// Local ideal zeta function of Z_p[X]/(X^n): w_lambda((1^n)).
BinomialProduct zpxn_zeta(int n);

/// Dirichlet coefficients a_1..a_N of prod_{j>=1} zeta(j s - j + 1), the
/// ideal zeta function of the power series ring Z[[X]]. Index 0 of the
/// result is unused and set to 0.
std::vector<Int> powerseries_ring_coeffs(int max_n);

/// (1 - X Y^2 + X^{e+1} Y^{e+1} (Y - 1)) / (1 - X Y): the correction to
/// zeta_p(s) zeta_p(2s - 1) for [[0, a], [0, 0]] with v_p(a) = e.
BivariateRational exceptional_factor_2x2(int e);

/// Coefficients of exceptional_factor_2x2(e) * zeta_p(s) zeta_p(2s - 1).
DirichletCoefficients exceptional_2x2_coefficients(int e, std::uint64_t p, int max_exp);

}  // namespace subzeta
