// Acceptance criteria, one PASS/FAIL line each. Exit status is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "subzeta/analysis.hpp"
#include "subzeta/campaign.hpp"
#include "subzeta/normal_forms.hpp"

using namespace subzeta;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

const IntPoly kX{0, 1};

ElementaryDivisorVector nilpotent(const Partition& lambda) { return ElementaryDivisorVector({{kX, lambda}}); }

std::vector<Int> oracle(const IntMatrix& a, std::uint64_t p, int e) { return count_invariant_sublattices(a, p, e).values; }

void zpxn_closed_form(Outcome& out) {
  for (int n = 1; n <= 10; ++n) {
    BinomialProduct expected;
    for (int j = 1; j <= n; ++j) expected.multiply(j - 1, j, -1);
    out.require(zpxn_zeta(n) == expected, "closed form differs at n = " + std::to_string(n));
  }
  const IntMatrix c = companion(IntPoly{0, 0, 0, 1});
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    out.require(oracle(c, p, 5) == dirichlet_coefficients(zpxn_zeta(3), p, 5).values,
                "oracle disagrees at p = " + std::to_string(p));
  }
}

void zero_matrix(Outcome& out) {
  for (int n = 1; n <= 6; ++n) {
    const auto doc = analyze(IntMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
    std::string expected;
    for (int j = 0; j < n; ++j) expected += (j == 0 ? "zeta(s)" : " * zeta(s-" + std::to_string(j) + ")");
    out.require(io::global_to_text(doc.global) == expected, "formula for n = " + std::to_string(n));
    out.require(doc.abscissa == Abscissa{n, 1}, "abscissa for n = " + std::to_string(n));
    if (n <= 3) {
      const IntMatrix z(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      out.require(compare(z, 2, 4).matches(), "oracle mismatch for n = " + std::to_string(n));
    }
  }
}

void w_identity(Outcome& out) {
  out.require(w_lambda(Partition({2, 2, 1})) * w_lambda(Partition({3, 1})) ==
                  w_lambda(Partition({2, 2})) * w_lambda(Partition({3, 1, 1})),
              "products differ");
}

void functional_equation(Outcome& out) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto v = nilpotent(lambda);
      out.require(verify_functional_equation(w_lambda(lambda.dual()), functional_equation_data(v, 2)),
                  "fails for " + lambda.to_string());
    }
  const ElementaryDivisorVector mixed({{kX, Partition({2, 1})}, {IntPoly{-1, 1}, Partition({3})}});
  const auto primes = heuristic_bad_primes(mixed).good_primes(5);
  out.require(primes.size() == 5, "fewer than 5 good primes");
  for (std::uint64_t p : primes) {
    out.require(verify_functional_equation(local_euler_factor(mixed, p), functional_equation_data(mixed, p)),
                "mixed vector fails at p = " + std::to_string(p));
  }
}

void fe_collision(Outcome& out) {
  const Partition a({3, 1, 1, 1, 1}), b({2, 2, 2, 1});
  const auto da = functional_equation_data(nilpotent(a), 3);
  const auto db = functional_equation_data(nilpotent(b), 3);
  out.require(da == db, "functional-equation data differ");
  out.require(da == FunctionalEquationData{7, 21, 10}, "unexpected exponents");
  out.require(w_lambda(a.dual()) != w_lambda(b.dual()), "local factors coincide");
}

void exceptional(Outcome& out) {
  for (const auto& [p, e] : std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const IntMatrix a{{0, ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(e))}, {0, 0}};
    out.require(oracle(a, p, 5) == exceptional_2x2_coefficients(e, p, 5).values,
                "mismatch at p = " + std::to_string(p) + ", e = " + std::to_string(e));
  }
  out.require(exceptional_factor_2x2(0).exact_quotient() == BivariatePoly::constant(1), "e = 0 factor is not 1");
}

void splitting(Outcome& out) {
  const IntMatrix c = companion(IntPoly{1, 0, 1});
  const ElementaryDivisorVector v({{IntPoly{1, 0, 1}, Partition({1})}});
  int split = 0, inert = 0;
  for (std::uint64_t p = 3; split < 10 || inert < 10; p = next_prime(p)) {
    const bool one_mod_four = p % 4 == 1;
    if ((one_mod_four ? split : inert) >= 10) continue;
    ++(one_mod_four ? split : inert);
    const BinomialProduct expected = one_mod_four ? BinomialProduct({{0, 1, -2}}) : BinomialProduct({{0, 2, -1}});
    out.require(local_euler_factor(v, p) == expected, "Euler factor at p = " + std::to_string(p));
    out.require(oracle(c, p, 4) == dirichlet_coefficients(expected, p, 4).values,
                "oracle mismatch at p = " + std::to_string(p));
  }
}

void abscissa_coherence(Outcome& out) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const int alpha = abscissa(nilpotent(lambda)).alpha;
      out.require(alpha == lambda.length(), "alpha != length for " + lambda.to_string());
      out.require(abscissa_from_factors(w_lambda(lambda.dual())) == lambda.length(),
                  "local abscissa differs for " + lambda.to_string());
    }
  for (int n = 1; n <= 6; ++n) {
    const auto v = elementary_divisor_vector(n_of(Partition({n + 1, 1})));
    out.require(abscissa(v).alpha == 2, "N((n+1,1)) abscissa for n = " + std::to_string(n));
  }
}

void campaign(Outcome& out) {
  const CampaignReport r = run_campaign({});
  out.require(r.cases.size() == 50, "fewer than 50 matrices");
  for (const auto& c : r.cases) out.require(c.comparisons.size() == 3, "fewer than 3 primes for a matrix");
  out.require(r.mismatches == 0, std::to_string(r.mismatches) + " mismatches");
}

void power_series(Outcome& out) {
  const int N = 1000;
  const auto a = powerseries_ring_coeffs(N);
  // Truncated Dirichlet multiplication; m^j > N for j >= 10.
  std::vector<Int> naive(N + 1, Int(0));
  naive[1] = 1;
  for (int j = 1; j <= 9; ++j) {
    std::vector<Int> factor(N + 1, Int(0));
    for (long m = 1;; ++m) {
      const Int mj = ipow(Int(m), static_cast<unsigned long>(j));
      if (mj > N) break;
      factor[mj.get_si()] = ipow(Int(m), static_cast<unsigned long>(j - 1));
    }
    std::vector<Int> next(N + 1, Int(0));
    for (int u = 1; u <= N; ++u)
      for (int w = 1; u * w <= N; ++w) next[static_cast<std::size_t>(u * w)] += naive[static_cast<std::size_t>(u)] * factor[static_cast<std::size_t>(w)];
    naive = next;
  }
  naive[0] = a[0];
  out.require(a == naive, "coefficients differ from the naive product");
  out.require(a[2] == 1 && a[4] == 3, "a_2 or a_4 wrong");
}

void similarity_separation(Outcome& out) {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t k = i + 1; k < ps.size(); ++k) {
        out.require(w_lambda(ps[i]) != w_lambda(ps[k]), ps[i].to_string() + " and " + ps[k].to_string());
      }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion run;
    double limit_seconds;
  };
  const std::vector<Entry> criteria{
      {"zpxn closed form and oracle", zpxn_closed_form, 10},
      {"zero matrix formula", zero_matrix, 0},
      {"W identity", w_identity, 0},
      {"functional equation", functional_equation, 30},
      {"functional-equation collision", fe_collision, 0},
      {"exceptional 2x2 factor", exceptional, 0},
      {"splitting of X^2 + 1", splitting, 0},
      {"abscissa coherence", abscissa_coherence, 0},
      {"randomized oracle campaign", campaign, 300},
      {"power series ring coefficients", power_series, 0},
      {"similarity separation", similarity_separation, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && criteria[i].limit_seconds > 0 && secs > criteria[i].limit_seconds) {
      out.ok = false;
      out.detail = "exceeded " + std::to_string(static_cast<int>(criteria[i].limit_seconds)) + " s";
    }
    if (!out.ok) ++failed;
    std::printf("%-4s %2zu  %-32s %7.2fs%s%s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                out.ok ? "" : "  ", out.detail.c_str());
  }
  return failed;
}
