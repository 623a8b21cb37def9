#include <doctest.h>

#include <set>

#include "subzeta/errors.hpp"
#include "subzeta/zeta.hpp"

using namespace subzeta;

namespace {

using F = BinomialProduct::Factor;

const IntPoly kX{0, 1};
const IntPoly kXm1{-1, 1};
const IntPoly kI{1, 0, 1};

ElementaryDivisorVector nilpotent(const Partition& lambda) { return ElementaryDivisorVector({{kX, lambda}}); }

// Truncated power series in Y with integer coefficients at a fixed X = q.
std::vector<Int> geometric(const Int& c, int step, int len) {
  std::vector<Int> s(static_cast<std::size_t>(len), Int(0));
  Int v = 1;
  for (int k = 0; k < len; k += step) {
    s[static_cast<std::size_t>(k)] = v;
    v *= c;
  }
  return s;
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size(), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; i + k < a.size(); ++k) c[i + k] += a[i] * b[k];
  return c;
}

// Coefficients of a pure denominator product, one geometric series per factor.
std::vector<Int> naive_coefficients(const BinomialProduct& f, std::uint64_t p, int max_exp) {
  std::vector<Int> s(static_cast<std::size_t>(max_exp) + 1, Int(0));
  s[0] = 1;
  for (const auto& [a, b, e] : f.factors()) {
    REQUIRE(e < 0);
    for (int r = 0; r < -e; ++r) s = convolve(s, geometric(ipow(Int(static_cast<unsigned long>(p)), a), b, max_exp + 1));
  }
  return s;
}

Rat evaluate(const BinomialProduct& f, const Rat& x, const Rat& y) {
  Rat v = 1;
  for (const auto& [a, b, e] : f.factors()) {
    Rat term = 1;
    for (int i = 0; i < a; ++i) term *= x;
    for (int i = 0; i < b; ++i) term *= y;
    const Rat base = 1 - term;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) v = e < 0 ? Rat(v / base) : Rat(v * base);
  }
  return v;
}

Rat rpow(const Rat& x, long k) {
  Rat r = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = k < 0 ? Rat(r / x) : Rat(r * x);
  return r;
}

}  // namespace

TEST_CASE("binomial products are canonical") {
  BinomialProduct f;
  f.multiply(1, 2, -1);
  f.multiply(0, 1, -1);
  f.multiply(1, 2, 1);
  CHECK(f.factors() == std::vector<F>{{0, 1, -1}});
  CHECK((f * f.inverse()).empty());
  CHECK(BinomialProduct().to_string() == "1");
  CHECK(BinomialProduct({{0, 1, -1}, {1, 2, -1}}).to_string() == "(1 - t)^-1 (1 - q t^2)^-1");
  CHECK_THROWS_AS(f.multiply(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(f.multiply(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("w_lambda closed forms") {
  CHECK(w_lambda(Partition({3})) == BinomialProduct({{0, 1, -1}, {1, 1, -1}, {2, 1, -1}}));
  CHECK(w_lambda(Partition({1, 1, 1})) == BinomialProduct({{0, 1, -1}, {1, 2, -1}, {2, 3, -1}}));
  CHECK(w_lambda(Partition({2, 1})) == BinomialProduct({{0, 1, -1}, {1, 1, -1}, {2, 2, -1}}));
  CHECK_THROWS(w_lambda(Partition()));
}

TEST_CASE("zpxn closed form") {
  CHECK(zpxn_zeta(1) == BinomialProduct({{0, 1, -1}}));
  CHECK(zpxn_zeta(2) == BinomialProduct({{0, 1, -1}, {1, 2, -1}}));
  CHECK(zpxn_zeta(3) == BinomialProduct({{0, 1, -1}, {1, 2, -1}, {2, 3, -1}}));
  CHECK_THROWS(zpxn_zeta(0));
}

TEST_CASE("local Euler factors") {
  const ElementaryDivisorVector gauss({{kI, Partition({1})}});
  CHECK(local_euler_factor(gauss, 5) == BinomialProduct({{0, 1, -2}}));
  CHECK(local_euler_factor(gauss, 3) == BinomialProduct({{0, 2, -1}}));
  CHECK_THROWS_AS(local_euler_factor(gauss, 2), BadPrimeError);
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      CHECK(local_euler_factor(nilpotent(lambda), 7) == w_lambda(lambda.dual()));
}

TEST_CASE("global formula") {
  const auto g0 = global_formula(nilpotent(Partition({1, 1})), {});
  CHECK(g0.dedekind_factors == std::vector<DedekindFactor>{{kX, 1, 0}, {kX, 1, 1}});
  const auto gi = global_formula(ElementaryDivisorVector({{kI, Partition({1})}}), {});
  CHECK(gi.dedekind_factors == std::vector<DedekindFactor>{{kI, 1, 0}});
  const auto g21 = global_formula(nilpotent(Partition({2, 1})), {});
  CHECK(g21.dedekind_factors == std::vector<DedekindFactor>{{kX, 1, 0}, {kX, 1, 1}, {kX, 2, 2}});
}

TEST_CASE("abscissa") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(abscissa(nilpotent(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))) == Abscissa{n, 1});
    CHECK(abscissa(nilpotent(Partition({n}))) == Abscissa{1, n});
    CHECK(abscissa_from_factors(w_lambda(Partition({n}))) == n);
    CHECK(abscissa_from_factors(zpxn_zeta(n)) == 1);
  }
  CHECK(abscissa(ElementaryDivisorVector({{kX, Partition({2, 1})}, {kXm1, Partition({3})}})) == Abscissa{2, 1});
  CHECK(abscissa_from_factors(w_lambda(Partition({2, 1}))) == 2);
  CHECK_THROWS_AS(abscissa_from_factors(BinomialProduct({{0, 1, 1}})), std::domain_error);
}

TEST_CASE("abscissa agrees with the local factor at good primes, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto v = nilpotent(lambda);
      for (std::uint64_t p : {11ULL, 13ULL}) CHECK(abscissa_from_factors(local_euler_factor(v, p)) == abscissa(v).alpha);
    }
}

TEST_CASE("functional equation data") {
  CHECK(functional_equation_data(nilpotent(Partition({2, 1})), 5) == FunctionalEquationData{3, 3, 4});
  CHECK(functional_equation_data(nilpotent(Partition({1})), 5) == FunctionalEquationData{1, 0, 1});
  CHECK(functional_equation_data(nilpotent(Partition({2, 2, 1})), 5) == FunctionalEquationData{5, 10, 7});
  const auto a = functional_equation_data(nilpotent(Partition({3, 1, 1, 1, 1})), 5);
  const auto b = functional_equation_data(nilpotent(Partition({2, 2, 2, 1})), 5);
  CHECK(a == FunctionalEquationData{7, 21, 10});
  CHECK(a == b);
  CHECK(w_lambda(Partition({3, 1, 1, 1, 1}).dual()) != w_lambda(Partition({2, 2, 2, 1}).dual()));
  CHECK(verify_functional_equation(w_lambda(Partition({1})), {1, 0, 1}));
  CHECK_FALSE(verify_functional_equation(BinomialProduct({{0, 1, -1}, {1, 2, -1}}), {2, 1, 2}));
}

TEST_CASE("functional equation holds for all lambda, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto v = nilpotent(lambda);
      CHECK(verify_functional_equation(local_euler_factor(v, 3), functional_equation_data(v, 3)));
    }
}

TEST_CASE("functional equation checked numerically at rational points") {
  const ElementaryDivisorVector mixed({{kX, Partition({2, 1})}, {kXm1, Partition({3})}, {kI, Partition({2})}});
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    const BinomialProduct f = local_euler_factor(mixed, p);
    const FunctionalEquationData d = functional_equation_data(mixed, p);
    CHECK(verify_functional_equation(f, d));
    for (const Rat& y : {Rat(5, 13), Rat(2, 9), Rat(-3, 11)}) {
      const Rat x(static_cast<long>(p));
      const Rat lhs = evaluate(f, 1 / x, 1 / y);
      const Rat sign = d.sign_exponent % 2 == 0 ? 1 : -1;
      const Rat rhs = sign * rpow(x, d.q_exponent) * rpow(y, d.s_exponent) * evaluate(f, x, y);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pole at zero") {
  CHECK(has_simple_pole_at_zero(ElementaryDivisorVector({{IntPoly{-5, 1}, Partition({3, 2})}})));
  CHECK_FALSE(has_simple_pole_at_zero(ElementaryDivisorVector({{kI, Partition({1})}})));
  CHECK_FALSE(has_simple_pole_at_zero(ElementaryDivisorVector({{kX, Partition({1})}, {kXm1, Partition({1})}})));
}

TEST_CASE("w_lambda identity and injectivity") {
  CHECK(w_lambda(Partition({2, 2, 1})) * w_lambda(Partition({3, 1})) ==
        w_lambda(Partition({2, 2})) * w_lambda(Partition({3, 1, 1})));
  for (int n = 1; n <= 10; ++n) {
    std::set<std::string> seen;
    const auto ps = partitions_of(n);
    for (const auto& lambda : ps) seen.insert(w_lambda(lambda).to_string());
    CHECK(seen.size() == ps.size());
  }
}

TEST_CASE("dirichlet coefficients") {
  CHECK(dirichlet_coefficients(w_lambda(Partition({1, 1})), 2, 2).values == std::vector<Int>{1, 1, 3});
  CHECK(dirichlet_coefficients(w_lambda(Partition({2})), 3, 2).values == std::vector<Int>{1, 4, 13});
  CHECK(dirichlet_coefficients(BinomialProduct(), 5, 3).values == std::vector<Int>{1, 0, 0, 0});
  // Numerator factors as well.
  CHECK(dirichlet_coefficients(BinomialProduct({{1, 2, 1}}), 3, 3).values == std::vector<Int>{1, 0, -3, 0});
}

TEST_CASE("dirichlet coefficients equal independent truncated multiplication") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (std::uint64_t p : {2ULL, 5ULL}) {
        const auto w = w_lambda(lambda);
        CHECK(dirichlet_coefficients(w, p, 8).values == naive_coefficients(w, p, 8));
      }
  const auto f = w_lambda(Partition({2, 1})), g = w_lambda(Partition({3}));
  CHECK(dirichlet_coefficients(f * g, 3, 7).values ==
        convolve(dirichlet_coefficients(f, 3, 7).values, dirichlet_coefficients(g, 3, 7).values));
}

TEST_CASE("power series ring coefficients") {
  const auto a = powerseries_ring_coeffs(16);
  REQUIRE(a.size() == 17);
  CHECK(a[1] == 1);
  CHECK(a[2] == 1);
  CHECK(a[4] == 3);
  // Naive Dirichlet product of zeta(js - j + 1), j <= 5, up to 16.
  std::vector<Int> naive(17, Int(0));
  naive[1] = 1;
  for (int j = 1; j <= 5; ++j) {
    std::vector<Int> next(17, Int(0));
    for (int u = 1; u <= 16; ++u)
      for (int m = 1; u * ipow(Int(m), static_cast<unsigned long>(j)) <= 16; ++m) {
        const int mj = static_cast<int>(ipow(Int(m), static_cast<unsigned long>(j)).get_si());
        next[static_cast<std::size_t>(u * mj)] += naive[static_cast<std::size_t>(u)] * ipow(Int(m), static_cast<unsigned long>(j - 1));
      }
    naive = next;
  }
  CHECK(a == naive);
}

TEST_CASE("power series ring partial sums grow slowly") {
  const int N = 10000;
  const auto a = powerseries_ring_coeffs(N);
  Int sum = 0;
  for (int n = 1; n <= N; ++n) {
    sum += a[static_cast<std::size_t>(n)];
    if (n % 100 == 0) {
      // sum <= 2 n^{3/2}, compared in integers as sum^2 <= 4 n^3
      CHECK(sum * sum <= 4 * ipow(Int(n), 3));
    }
  }
}

TEST_CASE("exceptional 2x2 factor") {
  const auto one = exceptional_factor_2x2(0).exact_quotient();
  CHECK(one == BivariatePoly::constant(1));
  // e = 1: (1 - X Y^2 + X^2 Y^2 (Y - 1)) / (1 - X Y) = 1 + X Y - X Y^2
  const auto q1 = exceptional_factor_2x2(1).exact_quotient();
  CHECK(q1 == BivariatePoly::constant(1) + BivariatePoly::monomial(1, 1, 1) - BivariatePoly::monomial(1, 1, 2));
  CHECK(exceptional_2x2_coefficients(1, 2, 5).values == std::vector<Int>{1, 3, 3, 7, 7, 15});
  CHECK(exceptional_2x2_coefficients(2, 3, 4).values == std::vector<Int>{1, 4, 13, 13, 40});
  CHECK(exceptional_2x2_coefficients(0, 3, 4).values == dirichlet_coefficients(zpxn_zeta(2), 3, 4).values);
}
