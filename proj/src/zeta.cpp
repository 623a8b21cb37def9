#include "subzeta/zeta.hpp"

#include <algorithm>
#include <stdexcept>

#include "subzeta/errors.hpp"

namespace subzeta {

BinomialProduct w_lambda(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("W_lambda of the empty partition");
  BinomialProduct w;
  for (int j = 1; j <= lambda.size(); ++j) w.multiply(j - 1, lambda.ind(j), -1);
  return w;
}

BinomialProduct local_euler_factor(const ElementaryDivisorVector& edv, std::uint64_t p) {
  BinomialProduct out;
  for (const auto& entry : edv.entries()) {
    const SplittingProfile prof = splitting_profile(entry.poly, p);
    if (prof.ramified) {
      throw BadPrimeError(entry.poly.to_string() + " is not squarefree modulo " + std::to_string(p));
    }
    const Partition mu = entry.partition.dual();
    for (int d : prof.degrees) {
      for (int j = 1; j <= entry.partition.size(); ++j) out.multiply(d * (j - 1), d * mu.ind(j), -1);
    }
  }
  return out;
}

GlobalZetaExpression global_formula(const ElementaryDivisorVector& edv, BadPrimeSet bad_primes) {
  GlobalZetaExpression g;
  for (const auto& entry : edv.entries()) {
    const Partition mu = entry.partition.dual();
    for (int j = 1; j <= entry.partition.size(); ++j) g.dedekind_factors.push_back({entry.poly, mu.ind(j), j - 1});
  }
  g.bad_primes = std::move(bad_primes);
  return g;
}

Abscissa abscissa(const ElementaryDivisorVector& edv) {
  if (edv.size() == 0) throw std::invalid_argument("abscissa of an empty elementary divisor vector");
  Abscissa a;
  for (const auto& entry : edv.entries()) a.alpha = std::max(a.alpha, entry.partition.length());
  for (const auto& entry : edv.entries()) {
    if (entry.partition.length() == a.alpha) a.beta += entry.partition.last();
  }
  return a;
}

Rat abscissa_from_factors(const BinomialProduct& f) {
  if (f.empty()) throw std::domain_error("the empty product has no poles");
  Rat best;
  bool first = true;
  for (const auto& [a, b, e] : f.factors()) {
    if (e > 0) throw std::domain_error("abscissa_from_factors: product has numerator factors");
    const Rat pole(a + 1, b);
    if (first || pole > best) best = pole;
    first = false;
  }
  best.canonicalize();
  return best;
}

FunctionalEquationData functional_equation_data(const ElementaryDivisorVector& edv,
                                                const std::vector<SplittingProfile>& profiles) {
  if (profiles.size() != edv.size()) throw std::invalid_argument("need one splitting profile per entry");
  FunctionalEquationData d;
  for (std::size_t i = 0; i < edv.size(); ++i) {
    if (profiles[i].ramified) throw BadPrimeError("ramified splitting profile for " + edv[i].poly.to_string());
    const Partition& lambda = edv[i].partition;
    const long deg = edv[i].poly.degree();
    const long n = lambda.size();
    d.sign_exponent += n * profiles[i].places();
    d.q_exponent += deg * (n * (n - 1) / 2);
    const Partition mu = lambda.dual();
    long weighted = 0;
    for (int j = 1; j <= mu.length(); ++j) weighted += static_cast<long>(j) * mu[static_cast<std::size_t>(j - 1)];
    d.s_exponent += deg * weighted;
  }
  return d;
}

FunctionalEquationData functional_equation_data(const ElementaryDivisorVector& edv, std::uint64_t p) {
  std::vector<SplittingProfile> profiles;
  for (const auto& e : edv.entries()) profiles.push_back(splitting_profile(e.poly, p));
  return functional_equation_data(edv, profiles);
}

InvertedProduct invert_residue_field(const BinomialProduct& f) {
  // (1 - X^{-a} Y^{-b})^e = (-1)^e X^{-a e} Y^{-b e} (1 - X^a Y^b)^e
  InvertedProduct r;
  long parity = 0;
  for (const auto& [a, b, e] : f.factors()) {
    parity += e;
    r.x_exp -= static_cast<long>(a) * e;
    r.y_exp -= static_cast<long>(b) * e;
    r.rest.multiply(a, b, e);
  }
  r.sign = (parity % 2 == 0) ? 1 : -1;
  return r;
}

bool verify_functional_equation(const BinomialProduct& f, const FunctionalEquationData& data) {
  const InvertedProduct inv = invert_residue_field(f);
  const int expected_sign = (data.sign_exponent % 2 == 0) ? 1 : -1;
  return inv.rest == f && inv.sign == expected_sign && inv.x_exp == data.q_exponent && inv.y_exp == data.s_exponent;
}

bool has_simple_pole_at_zero(const ElementaryDivisorVector& edv) {
  return edv.size() == 1 && edv[0].poly.degree() == 1;
}

BinomialProduct zpxn_zeta(int n) {
  if (n < 1) throw std::invalid_argument("zpxn_zeta needs n >= 1");
  return w_lambda(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

std::vector<Int> powerseries_ring_coeffs(int max_n) {
  if (max_n < 1) throw std::invalid_argument("powerseries_ring_coeffs needs N >= 1");
  const auto n = static_cast<std::size_t>(max_n);
  std::vector<Int> acc(n + 1, Int(0));
  acc[1] = 1;
  // zeta(j s - j + 1) = sum_m m^{j-1} (m^j)^{-s}; only j with 2^j <= N matter
  for (std::size_t j = 1; (std::size_t{1} << j) <= n; ++j) {
    std::vector<std::pair<std::size_t, Int>> support;  // (m^j, m^{j-1}), m >= 2
    for (std::size_t m = 2;; ++m) {
      Int mj = ipow(Int(static_cast<unsigned long>(m)), static_cast<unsigned long>(j));
      if (mj > static_cast<unsigned long>(n)) break;
      support.emplace_back(mj.get_ui(), ipow(Int(static_cast<unsigned long>(m)), static_cast<unsigned long>(j - 1)));
    }
    std::vector<Int> next = acc;
    for (const auto& [d, w] : support) {
      for (std::size_t q = 1; q * d <= n; ++q) {
        if (acc[q] != 0) next[q * d] += w * acc[q];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

BivariateRational exceptional_factor_2x2(int e) {
  if (e < 0) throw std::invalid_argument("valuation must be non-negative");
  BivariatePoly num = BivariatePoly::constant(Int(1));
  num = num - BivariatePoly::monomial(Int(1), 1, 2);
  num = num + BivariatePoly::monomial(Int(1), e + 1, e + 2);
  num = num - BivariatePoly::monomial(Int(1), e + 1, e + 1);
  BivariatePoly den = BivariatePoly::constant(Int(1)) - BivariatePoly::monomial(Int(1), 1, 1);
  return {num, den};
}

DirichletCoefficients exceptional_2x2_coefficients(int e, std::uint64_t p, int max_exp) {
  const YSeries correction = expand(exceptional_factor_2x2(e), max_exp);
  BinomialProduct zz;
  zz.multiply(0, 1, -1);
  zz.multiply(1, 2, -1);
  return evaluate_at(multiply(correction, zz), p);
}

}  // namespace subzeta
