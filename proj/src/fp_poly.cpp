#include "subzeta/fp_poly.hpp"

#include <stdexcept>
#include <tuple>

namespace subzeta::fp {

using u128 = unsigned __int128;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Field::Field(std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
}

Elem Field::mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<u128>(a) * b % p_); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  Elem r = 1;
  Elem b = a;
  std::uint64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1U) r = mul(r, b);
    b = mul(b, b);
    e >>= 1U;
  }
  return r;
}

Elem Field::reduce(const Int& v) const {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

Vec Field::from_int(const IntPoly& f) const {
  Vec v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(reduce(c));
  trim(v);
  return v;
}

IntPoly Field::to_int(const Vec& f) const {
  std::vector<Int> c;
  c.reserve(f.size());
  for (Elem x : f) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

Vec Field::add(const Vec& a, const Vec& b) const {
  Vec c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = add(c[i], b[i]);
  trim(c);
  return c;
}

Vec Field::sub(const Vec& a, const Vec& b) const {
  Vec c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
  trim(c);
  return c;
}

Vec Field::mul(const Vec& a, const Vec& b) const {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add(c[i + j], mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

Vec Field::scale(const Vec& a, Elem s) const {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mul(a[i], s);
  trim(c);
  return c;
}

std::pair<Vec, Vec> Field::divrem(const Vec& a, const Vec& b) const {
  if (b.empty()) throw std::domain_error("division by the zero polynomial over F_p");
  if (a.size() < b.size()) return {Vec{}, a};
  Vec r = a;
  Vec q(a.size() - b.size() + 1, 0);
  const Elem lead_inv = inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Elem c = mul(r[i], lead_inv);
    q[i - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i - (b.size() - 1) + j] = sub(r[i - (b.size() - 1) + j], mul(c, b[j]));
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

Vec Field::monic(const Vec& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

Vec Field::gcd(Vec a, Vec b) const {
  while (!b.empty()) {
    Vec r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::tuple<Vec, Vec, Vec> Field::gcdext(const Vec& a, const Vec& b) const {
  Vec r0 = a, r1 = b;
  Vec s0{1}, s1{};
  Vec t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1);
    Vec s2 = sub(s0, mul(q, s1));
    Vec t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const Elem li = inv(r0.back());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

Vec Field::derivative(const Vec& a) const {
  Vec d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], static_cast<Elem>(i % p_)));
  trim(d);
  return d;
}

Vec Field::powmod(Vec base, std::uint64_t e, const Vec& m) const {
  Vec r = rem(Vec{1}, m);
  base = rem(base, m);
  while (e > 0) {
    if (e & 1U) r = rem(mul(r, base), m);
    e >>= 1U;
    if (e > 0) base = rem(mul(base, base), m);
  }
  return r;
}

namespace {

// Basis of { v : v (Q - I) = 0 } for the Berlekamp matrix Q of f.
std::vector<Vec> berlekamp_kernel(const Field& F, const Vec& f) {
  const auto d = static_cast<std::size_t>(degree(f));
  // rows[i] = X^{i p} mod f
  std::vector<Vec> rows(d);
  const Vec xp = F.powmod(Vec{0, 1}, F.p(), f);
  Vec cur{1};
  for (std::size_t i = 0; i < d; ++i) {
    rows[i] = cur;
    rows[i].resize(d, 0);
    cur = F.rem(F.mul(cur, xp), f);
  }
  // M = (Q - I)^T so that the left kernel of Q - I is the null space of M.
  std::vector<Vec> m(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[j][i] = F.sub(rows[i][j], i == j ? 1 : 0);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < d; ++c) {
    std::size_t piv = r;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) continue;
    std::swap(m[piv], m[r]);
    const Elem iv = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, iv);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Elem fct = m[i][c];
      for (std::size_t j = 0; j < d; ++j) m[i][j] = F.sub(m[i][j], F.mul(fct, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec v(d, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.sub(0, m[k][free]);
    trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

int berlekamp_count(const Field& field, const Vec& f) {
  if (degree(f) <= 0) return 0;
  return static_cast<int>(berlekamp_kernel(field, f).size());
}

std::vector<Vec> berlekamp(const Field& F, const Vec& f) {
  if (degree(f) <= 0) return {};
  const std::vector<Vec> basis = berlekamp_kernel(F, f);
  const std::size_t r = basis.size();
  std::vector<Vec> factors{F.monic(f)};
  for (const Vec& v : basis) {
    if (factors.size() == r) break;
    if (degree(v) <= 0) continue;
    std::vector<Vec> next;
    for (const Vec& g : factors) {
      if (degree(g) <= 1) {
        next.push_back(g);
        continue;
      }
      Vec rest = g;
      for (std::uint64_t s = 0; s < F.p() && degree(rest) > 0; ++s) {
        Vec shifted = v;
        shifted[0] = F.sub(shifted[0], static_cast<Elem>(s));
        trim(shifted);
        Vec h = F.gcd(rest, shifted);
        if (degree(h) <= 0) continue;
        next.push_back(h);
        rest = F.divrem(rest, h).first;
      }
      if (degree(rest) > 0) next.push_back(F.monic(rest));
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace subzeta::fp
