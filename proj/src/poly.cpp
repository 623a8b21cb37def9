#include "subzeta/poly.hpp"

#include "subzeta/linalg.hpp"

namespace subzeta {

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly to_int(const RatPoly& f) {
  std::vector<Int> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) {
    if (x.get_den() != 1) throw std::domain_error("polynomial has non-integral coefficients");
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

RatPoly make_monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  Rat inv = 1 / f.leading();
  return inv * f;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RatPoly lcm(const RatPoly& a, const RatPoly& b) {
  auto g = gcd(a, b);
  return make_monic((a * b).divrem(g).first);
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const auto size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = g.coeff(n - k);
  return determinant(s);
}

Int discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant of a constant polynomial");
  Int r = resultant(f, f.derivative());
  if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace subzeta
