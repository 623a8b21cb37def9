#include <doctest.h>

#include <random>

#include "subzeta/arith.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/polyfactor.hpp"

using namespace subzeta;

namespace {

IntPoly product(const std::vector<Factor>& fs) {
  IntPoly r{1};
  for (const auto& f : fs) r = r * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

int roots_mod_p(const IntPoly& f, std::uint64_t p) {
  int count = 0;
  const Int pp(static_cast<unsigned long>(p));
  for (std::uint64_t x = 0; x < p; ++x) {
    Int v = f(Int(static_cast<unsigned long>(x)));
    if (v % pp == 0) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("factorization over Z") {
  const auto a = factor_over_Z(IntPoly{-1, 0, 1});
  REQUIRE(a.size() == 2);
  CHECK(a[0].poly == IntPoly{-1, 1});
  CHECK(a[1].poly == IntPoly{1, 1});
  CHECK(factor_over_Z(IntPoly{1, 0, 1}).size() == 1);
  CHECK(factor_over_Z(IntPoly{1, 0, 0, 0, 1}).size() == 1);
  // Irreducible over Q but reducible modulo every prime.
  CHECK(factor_over_Z(IntPoly{1, 0, -10, 0, 1}).size() == 1);
  // X^6 - 1 = (X - 1)(X + 1)(X^2 - X + 1)(X^2 + X + 1)
  const auto c = factor_over_Z(IntPoly{-1, 0, 0, 0, 0, 0, 1});
  REQUIRE(c.size() == 4);
  CHECK(c[2].poly == IntPoly{1, -1, 1});
  CHECK(c[3].poly == IntPoly{1, 1, 1});
  CHECK_THROWS_AS(factor_over_Z(IntPoly{1, 2}), std::invalid_argument);
}

TEST_CASE("multiplicities") {
  // X^2 (X - 1)^3 (X^2 + 1)
  const IntPoly f = IntPoly{0, 1}.pow(2) * IntPoly{-1, 1}.pow(3) * IntPoly{1, 0, 1};
  const auto fs = factor_over_Z(f);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].poly == IntPoly{-1, 1});
  CHECK(fs[0].multiplicity == 3);
  CHECK(fs[1].poly == IntPoly{0, 1});
  CHECK(fs[1].multiplicity == 2);
  CHECK(fs[2].multiplicity == 1);
  CHECK(product(fs) == f);
  const auto sq = squarefree_decomposition(f);
  CHECK(product(sq) == f);
}

TEST_CASE("factorization reconstructs the input and factors are irreducible") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f{1};
    for (int k = 0; k < 3; ++k) {
      std::vector<Int> c;
      const int d = deg(rng);
      for (int i = 0; i < d; ++i) c.emplace_back(coeff(rng));
      c.emplace_back(1);
      f = f * IntPoly(std::move(c));
    }
    const auto fs = factor_over_Z(f);
    CHECK(product(fs) == f);
    for (const auto& g : fs) {
      const auto again = factor_over_Z(g.poly);
      REQUIRE(again.size() == 1);
      CHECK(again[0].poly == g.poly);
      CHECK(again[0].multiplicity == 1);
    }
  }
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(factor_over_Z(IntPoly::monomial(6) + IntPoly{1}, 5), DegreeCapExceeded);
}

TEST_CASE("splitting profiles") {
  const IntPoly i{1, 0, 1};
  CHECK(splitting_profile(i, 5).degrees == std::vector<int>{1, 1});
  CHECK(splitting_profile(i, 3).degrees == std::vector<int>{2});
  CHECK(splitting_profile(i, 2).ramified);
  CHECK_THROWS_AS(splitting_profile(i, 9), std::invalid_argument);
  // X^3 - 2 at p = 7: no cube root of 2 mod 7 and 7 = 1 mod 3.
  CHECK(splitting_profile(IntPoly{-2, 0, 0, 1}, 7).degrees == std::vector<int>{3});
  // At p = 5 every residue is a cube: one root and a quadratic.
  CHECK(splitting_profile(IntPoly{-2, 0, 0, 1}, 5).degrees == std::vector<int>{1, 2});
}

TEST_CASE("splitting degrees agree with root counts") {
  const std::vector<IntPoly> fields{
      IntPoly{1, 0, 1},           IntPoly{-2, 0, 1},         IntPoly{-2, 0, 0, 1},
      IntPoly{1, 1, 1},           IntPoly{1, 0, 0, 0, 1},    IntPoly{1, 0, -10, 0, 1},
      IntPoly{-1, -1, 0, 1},      IntPoly{1, 1, 1, 1, 1},    IntPoly{-2, 0, 0, 0, 0, 1},
      IntPoly{1, -1, 0, 0, 0, 0, 1}};
  for (const auto& f : fields) {
    REQUIRE(factor_over_Z(f).size() == 1);
    const Int disc = discriminant(f);
    int good = 0;
    for (std::uint64_t p = 2; good < 25; p = next_prime(p)) {
      if (disc % Int(static_cast<unsigned long>(p)) == 0) {
        CHECK(splitting_profile(f, p).ramified);
        continue;
      }
      ++good;
      const SplittingProfile s = splitting_profile(f, p);
      REQUIRE_FALSE(s.ramified);
      int total = 0, linear = 0;
      for (int d : s.degrees) {
        total += d;
        if (d == 1) ++linear;
      }
      CHECK(total == f.degree());
      CHECK(linear == roots_mod_p(f, p));
    }
  }
}

TEST_CASE("resultant and discriminant") {
  CHECK(discriminant(IntPoly{1, 0, 1}) == -4);
  CHECK(discriminant(IntPoly{-2, 0, 0, 1}) == -108);
  CHECK(resultant(IntPoly{0, 1}, IntPoly{-1, 1}) == -1);
  CHECK(abs(resultant(IntPoly{1, 0, 1}, IntPoly{-2, 1})) == 5);
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK_FALSE(is_prime(3'215'031'751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(primes_after(10, 3) == std::vector<std::uint64_t>{11, 13, 17});
  const auto pf = distinct_prime_divisors(Int(360));
  CHECK(pf.primes == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(pf.cofactor == 1);
}
