#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subzeta/arith.hpp"

namespace subzeta {

/// Dense univariate polynomial, coefficients lowest degree first, with no
/// trailing zero coefficients. The zero polynomial has no coefficients and
/// degree -1.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
  /// X^k
  static Poly monomial(int k) {
    std::vector<R> c(static_cast<std::size_t>(k) + 1, R(0));
    c.back() = 1;
    return Poly(std::move(c));
  }

  const std::vector<R>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  R coeff(int i) const {
    return (i < 0 || i > degree()) ? R(0) : c_[static_cast<std::size_t>(i)];
  }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly derivative() const {
    std::vector<R> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Poly(std::move(d));
  }

  R operator()(const R& x) const {
    R acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<R> c = a.c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly r = constant(R(1));
    Poly b = *this;
    while (e > 0) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e > 0) b *= b;
    }
    return r;
  }

  /// Quotient and remainder. Over Int the divisor must be monic; over a
  /// field any non-zero divisor is accepted.
  std::pair<Poly, Poly> divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const R& lc = d.leading();
    if constexpr (std::is_same_v<R, Int>) {
      if (lc != 1 && lc != -1) throw std::domain_error("integer polynomial division needs a monic divisor");
    }
    std::vector<R> rem = c_;
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<R> q(static_cast<std::size_t>(degree() - d.degree() + 1), R(0));
    for (int i = degree(); i >= d.degree(); --i) {
      R coef = rem[static_cast<std::size_t>(i)];
      if (coef == 0) continue;
      if constexpr (std::is_same_v<R, Int>) {
        coef *= lc;  // lc is a unit, its own inverse
      } else {
        coef /= lc;
      }
      q[static_cast<std::size_t>(i - d.degree())] = coef;
      for (int j = 0; j <= d.degree(); ++j) {
        rem[static_cast<std::size_t>(i - d.degree() + j)] -= coef * d.c_[static_cast<std::size_t>(j)];
      }
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Canonical order: by degree, then coefficients from the constant term up.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
      if (b.c_[i] < a.c_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// Human-readable form in the variable `var`, highest degree first,
  /// e.g. "X^2 - 3*X + 2".
  std::string to_string(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      R a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      bool neg = a < 0;
      if (neg) a = -a;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) {
        s += subzeta::to_string(a);
      } else if (a == 1) {
        s += mono;
      } else {
        s += subzeta::to_string(a) + "*" + mono;
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rat(const IntPoly& f);
/// Converts a polynomial with integral coefficients; throws otherwise.
IntPoly to_int(const RatPoly& f);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly make_monic(const RatPoly& f);
/// Monic lcm over Q of non-zero polynomials.
RatPoly lcm(const RatPoly& a, const RatPoly& b);

/// Resultant of two integer polynomials (Sylvester determinant).
Int resultant(const IntPoly& f, const IntPoly& g);
/// Discriminant of a monic polynomial, (-1)^(n(n-1)/2) Res(f, f').
Int discriminant(const IntPoly& f);

}  // namespace subzeta
