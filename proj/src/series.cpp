#include "subzeta/series.hpp"

#include <stdexcept>

namespace subzeta {

BinomialProduct::BinomialProduct(const std::vector<Factor>& factors) {
  for (const auto& f : factors) multiply(f.a, f.b, f.e);
}

void BinomialProduct::multiply(int a, int b, int e) {
  if (a < 0) throw std::invalid_argument("binomial X-exponent must be non-negative");
  if (b < 1) throw std::invalid_argument("binomial Y-exponent must be positive");
  if (e == 0) return;
  const auto key = std::make_pair(a, b);
  const int total = (exps_.count(key) != 0U ? exps_[key] : 0) + e;
  if (total == 0) {
    exps_.erase(key);
  } else {
    exps_[key] = total;
  }
}

std::vector<BinomialProduct::Factor> BinomialProduct::factors() const {
  std::vector<Factor> out;
  out.reserve(exps_.size());
  for (const auto& [k, e] : exps_) out.push_back({k.first, k.second, e});
  return out;
}

BinomialProduct BinomialProduct::inverse() const {
  BinomialProduct r;
  for (const auto& [k, e] : exps_) r.exps_[k] = -e;
  return r;
}

BinomialProduct operator*(const BinomialProduct& x, const BinomialProduct& y) {
  BinomialProduct r = x;
  for (const auto& [k, e] : y.exps_) r.multiply(k.first, k.second, e);
  return r;
}

std::string BinomialProduct::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [k, e] : exps_) {
    if (!s.empty()) s += ' ';
    s += "(1 - ";
    if (k.first == 1) s += "q ";
    if (k.first > 1) s += "q^" + std::to_string(k.first) + " ";
    s += k.second == 1 ? "t)" : "t^" + std::to_string(k.second) + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

BivariatePoly BivariatePoly::constant(const Int& c) { return monomial(c, 0, 0); }

BivariatePoly BivariatePoly::monomial(const Int& c, int x_exp, int y_exp) {
  BivariatePoly p;
  p.add_term(c, x_exp, y_exp);
  return p;
}

void BivariatePoly::add_term(const Int& c, int x_exp, int y_exp) {
  if (x_exp < 0 || y_exp < 0) throw std::invalid_argument("negative exponent in a bivariate polynomial");
  if (c == 0) return;
  const auto key = std::make_pair(x_exp, y_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int BivariatePoly::y_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

IntPoly BivariatePoly::y_coeff(int k) const {
  std::vector<Int> c;
  for (const auto& [key, v] : terms_) {
    if (key.second != k) continue;
    if (c.size() <= static_cast<std::size_t>(key.first)) c.resize(static_cast<std::size_t>(key.first) + 1, Int(0));
    c[static_cast<std::size_t>(key.first)] += v;
  }
  return IntPoly(std::move(c));
}

BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r = p;
  for (const auto& [k, c] : q.terms_) r.add_term(c, k.first, k.second);
  return r;
}

BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r = p;
  for (const auto& [k, c] : q.terms_) r.add_term(-c, k.first, k.second);
  return r;
}

BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly r;
  for (const auto& [k1, c1] : p.terms_)
    for (const auto& [k2, c2] : q.terms_) r.add_term(c1 * c2, k1.first + k2.first, k1.second + k2.second);
  return r;
}

Int BivariatePoly::evaluate(const Int& x, const Int& y) const {
  Int acc = 0;
  for (const auto& [k, c] : terms_) {
    acc += c * ipow(x, static_cast<unsigned long>(k.first)) * ipow(y, static_cast<unsigned long>(k.second));
  }
  return acc;
}

Rat BivariatePoly::evaluate(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  for (const auto& [k, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < k.first; ++i) term *= x;
    for (int i = 0; i < k.second; ++i) term *= y;
    acc += term;
  }
  return acc;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    Int a = c;
    const bool neg = a < 0;
    if (neg) a = -a;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    if (k.first != 0) mono += "q^" + std::to_string(k.first);
    if (k.second != 0) mono += std::string(mono.empty() ? "" : " ") + "t^" + std::to_string(k.second);
    if (mono.empty()) {
      s += a.get_str();
    } else if (a == 1) {
      s += mono;
    } else {
      s += a.get_str() + " " + mono;
    }
  }
  return s;
}

namespace {

IntPoly shift_x(const IntPoly& f, int a) {
  if (f.is_zero() || a == 0) return f;
  std::vector<Int> c(static_cast<std::size_t>(a), Int(0));
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return IntPoly(std::move(c));
}

}  // namespace

YSeries multiply(YSeries s, const BinomialProduct& f) {
  const int n = static_cast<int>(s.size());
  for (const auto& [a, b, e] : f.factors()) {
    if (e < 0) {
      // divide by (1 - X^a Y^b), |e| times
      for (int rep = 0; rep < -e; ++rep)
        for (int k = b; k < n; ++k) s[static_cast<std::size_t>(k)] += shift_x(s[static_cast<std::size_t>(k - b)], a);
    } else {
      for (int rep = 0; rep < e; ++rep)
        for (int k = n - 1; k >= b; --k) s[static_cast<std::size_t>(k)] -= shift_x(s[static_cast<std::size_t>(k - b)], a);
    }
  }
  return s;
}

YSeries expand(const BinomialProduct& f, int max_exp) {
  if (max_exp < 0) throw std::invalid_argument("truncation order must be non-negative");
  YSeries s(static_cast<std::size_t>(max_exp) + 1);
  s[0] = IntPoly::constant(Int(1));
  return multiply(std::move(s), f);
}

YSeries expand(const BivariateRational& f, int max_exp) {
  if (max_exp < 0) throw std::invalid_argument("truncation order must be non-negative");
  if (f.denominator.y_coeff(0) != IntPoly::constant(Int(1))) {
    throw std::domain_error("series expansion needs a denominator with constant term 1 in Y");
  }
  const int dd = f.denominator.y_degree();
  std::vector<IntPoly> den(static_cast<std::size_t>(dd) + 1);
  for (int i = 0; i <= dd; ++i) den[static_cast<std::size_t>(i)] = f.denominator.y_coeff(i);
  YSeries out(static_cast<std::size_t>(max_exp) + 1);
  for (int k = 0; k <= max_exp; ++k) {
    IntPoly c = f.numerator.y_coeff(k);
    for (int i = 1; i <= std::min(k, dd); ++i) c -= den[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
    out[static_cast<std::size_t>(k)] = std::move(c);
  }
  return out;
}

BivariatePoly BivariateRational::exact_quotient() const {
  const int dn = numerator.y_degree();
  const int dd = denominator.y_degree();
  if (dd < 0) throw std::domain_error("division by the zero polynomial");
  BivariatePoly q;
  if (dn >= dd) {
    const YSeries s = expand(*this, dn - dd);
    for (int k = 0; k <= dn - dd; ++k) {
      const auto& c = s[static_cast<std::size_t>(k)].coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) q.add_term(c[i], static_cast<int>(i), k);
    }
  }
  if (q * denominator != numerator) throw std::domain_error("denominator does not divide numerator");
  return q;
}

DirichletCoefficients evaluate_at(const YSeries& s, std::uint64_t p) {
  DirichletCoefficients d;
  d.prime = p;
  const Int x(static_cast<unsigned long>(p));
  d.values.reserve(s.size());
  for (const auto& c : s) d.values.push_back(c(x));
  return d;
}

DirichletCoefficients dirichlet_coefficients(const BinomialProduct& f, std::uint64_t p, int max_exp) {
  return evaluate_at(expand(f, max_exp), p);
}

}  // namespace subzeta
