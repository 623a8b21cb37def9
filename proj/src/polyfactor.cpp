#include "subzeta/polyfactor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "subzeta/arith.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/fp_poly.hpp"

namespace subzeta {
namespace {

void require_monic(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("expected a polynomial of degree >= 1");
  if (!f.is_monic()) throw std::invalid_argument("expected a monic polynomial");
}

IntPoly mod_poly(const IntPoly& f, const Int& m) {
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    c.push_back(r);
  }
  return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& f, const Int& m) {
  const Int half = m / 2;
  std::vector<Int> c;
  for (const auto& x : f.coeffs()) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (r > half) r -= m;
    c.push_back(r);
  }
  return IntPoly(std::move(c));
}

// Lifts f = g0 h0 (mod p), g0 and h0 monic and coprime mod p, to
// f = g h (mod p^k) with g, h monic.
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const fp::Vec& g0, const fp::Vec& h0,
                                        const fp::Field& F, unsigned k) {
  auto [one, s, t] = F.gcdext(g0, h0);
  if (fp::degree(one) != 0) throw std::logic_error("Hensel lifting needs coprime factors");
  IntPoly g = F.to_int(g0);
  IntPoly h = F.to_int(h0);
  Int m = static_cast<unsigned long>(F.p());
  for (unsigned j = 1; j < k; ++j) {
    const IntPoly diff = f - g * h;
    std::vector<Int> ec;
    for (const auto& x : diff.coeffs()) {
      Int q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
      ec.push_back(q);
    }
    const fp::Vec e = F.from_int(IntPoly(std::move(ec)));
    auto [q, dg] = F.divrem(F.mul(e, t), g0);
    const fp::Vec dh = F.add(F.mul(e, s), F.mul(q, h0));
    g += m * F.to_int(dg);
    h += m * F.to_int(dh);
    m *= static_cast<unsigned long>(F.p());
    g = mod_poly(g, m);
    h = mod_poly(h, m);
  }
  return {g, h};
}

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<fp::Vec>& factors,
                                 const fp::Field& F, unsigned k) {
  std::vector<IntPoly> out;
  IntPoly current = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    fp::Vec rest{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = F.mul(rest, factors[j]);
    auto [g, h] = hensel_pair(current, factors[i], rest, F, k);
    out.push_back(std::move(g));
    current = std::move(h);
  }
  out.push_back(current);
  return out;
}

// Landau-Mignotte style bound on the coefficients of any monic factor.
Int factor_coefficient_bound(const IntPoly& f) {
  Int norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  return ipow(Int(2), static_cast<unsigned long>(f.degree())) * root;
}

bool divides_exactly(const IntPoly& g, const IntPoly& f, IntPoly* quotient) {
  if (f.coeff(0) != 0 && g.coeff(0) != 0 && f.coeff(0) % g.coeff(0) != 0) return false;
  auto [q, r] = f.divrem(g);
  if (!r.is_zero()) return false;
  *quotient = std::move(q);
  return true;
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() == 1) return {f};
  const Int disc = discriminant(f);
  // Among the first few primes of good reduction, take the one giving the
  // fewest modular factors.
  std::uint64_t best_p = 0;
  int best_count = 0;
  int tried = 0;
  for (std::uint64_t p = 2; tried < 6; p = next_prime(p)) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) continue;
    ++tried;
    const fp::Field F(p);
    const int count = fp::berlekamp_count(F, F.from_int(f));
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count == 1) return {f};
  const fp::Field F(best_p);
  const std::vector<fp::Vec> modular = fp::berlekamp(F, F.from_int(f));

  const Int bound = 2 * factor_coefficient_bound(f) + 1;
  unsigned k = 1;
  Int modulus = static_cast<unsigned long>(best_p);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }
  std::vector<IntPoly> lifted = hensel_lift(f, modular, F, k);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      IntPoly cand = IntPoly::constant(Int(1));
      for (auto i : idx) cand = mod_poly(cand * lifted[i], modulus);
      cand = symmetric_mod(cand, modulus);
      IntPoly quotient;
      if (divides_exactly(cand, rest, &quotient)) {
        found.push_back(cand);
        rest = std::move(quotient);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
        progress = true;
        break;
      }
      // next combination of `size` indices out of lifted.size()
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == lifted.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!progress) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const IntPoly& f) {
  require_monic(f);
  const RatPoly rf = to_rat(f);
  const RatPoly df = rf.derivative();
  const RatPoly b = gcd(rf, df);
  RatPoly c = rf.divrem(b).first;
  RatPoly d = df.divrem(b).first - c.derivative();
  std::vector<Factor> out;
  for (int i = 1; c.degree() > 0; ++i) {
    const RatPoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({to_int(a), i});
    c = c.divrem(a).first;
    d = d.divrem(a).first - c.derivative();
  }
  return out;
}

std::vector<Factor> factor_over_Z(const IntPoly& f, int degree_cap) {
  require_monic(f);
  if (f.degree() > degree_cap) {
    throw DegreeCapExceeded("polynomial of degree " + std::to_string(f.degree()) +
                            " exceeds the factorization degree cap " + std::to_string(degree_cap));
  }
  std::vector<Factor> out;
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree(part.poly)) out.push_back({std::move(g), part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

SplittingProfile splitting_profile(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  require_monic(f);
  SplittingProfile prof;
  prof.prime = p;
  const fp::Field F(p);
  fp::Vec g = F.from_int(f);
  if (fp::degree(F.gcd(g, F.derivative(g))) > 0) {
    prof.ramified = true;
    return prof;
  }
  const fp::Vec x{0, 1};
  fp::Vec h = x;
  for (int d = 1; fp::degree(g) >= 2 * d; ++d) {
    h = F.powmod(h, p, g);
    const fp::Vec gd = F.gcd(g, F.sub(h, x));
    if (fp::degree(gd) > 0) {
      for (int c = 0; c < fp::degree(gd) / d; ++c) prof.degrees.push_back(d);
      g = F.divrem(g, gd).first;
      h = F.rem(h, g);
    }
  }
  if (fp::degree(g) > 0) prof.degrees.push_back(fp::degree(g));
  std::sort(prof.degrees.begin(), prof.degrees.end());
  return prof;
}

std::string SplittingProfile::to_string() const {
  if (ramified) return "p=" + std::to_string(prime) + ": ramified";
  std::string s = "p=" + std::to_string(prime) + ": {";
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  return s + "}";
}

}  // namespace subzeta
