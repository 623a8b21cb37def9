#include "subzeta/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace subzeta::io {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed integer string: " + j.get<std::string>());
    return v;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw std::invalid_argument("matrix JSON needs an \"entries\" array");
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix must have n >= 1 rows");
  const std::size_t n = rows.size();
  if (j.contains("n") && j.at("n").get<std::size_t>() != n) throw std::invalid_argument("\"n\" disagrees with the number of rows");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = int_from_json(rows[i][k]);
  }
  return m;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(int_to_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return {{"n", m.rows()}, {"entries", rows}};
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
  std::vector<Int> c;
  for (const auto& x : j) c.push_back(int_from_json(x));
  return IntPoly(std::move(c));
}

json poly_to_json(const IntPoly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(int_to_json(c));
  return a;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array of positive integers");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(x.get<int>());
  return Partition(std::move(parts));
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

ElementaryDivisorVector edv_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("edv") ? j.at("edv") : j;
  if (!arr.is_array() || arr.empty()) throw std::invalid_argument("EDV must be a non-empty array");
  std::vector<EdvEntry> entries;
  for (const auto& e : arr) {
    entries.push_back({poly_from_json(e.at("poly")), partition_from_json(e.at("partition"))});
  }
  return ElementaryDivisorVector(std::move(entries));
}

json edv_to_json(const ElementaryDivisorVector& edv) {
  json a = json::array();
  for (const auto& e : edv.entries()) a.push_back({{"poly", poly_to_json(e.poly)}, {"partition", partition_to_json(e.partition)}});
  return a;
}

json product_to_json(const BinomialProduct& f) {
  json a = json::array();
  for (const auto& [x, y, e] : f.factors()) a.push_back({{"a", x}, {"b", y}, {"e", e}});
  return a;
}

BinomialProduct product_from_json(const json& j) {
  BinomialProduct f;
  for (const auto& x : j) f.multiply(x.at("a").get<int>(), x.at("b").get<int>(), x.at("e").get<int>());
  return f;
}

std::string product_to_latex(const BinomialProduct& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& [a, b, e] : f.factors()) {
    s += "(1 - ";
    if (a == 1) s += "q";
    if (a > 1) s += "q^{" + std::to_string(a) + "}";
    s += b == 1 ? "t" : "t^{" + std::to_string(b) + "}";
    s += ")";
    if (e != 1) s += "^{" + std::to_string(e) + "}";
  }
  return s;
}

namespace {

std::string argument(const DedekindFactor& d) {
  std::string s = d.scale == 1 ? "s" : std::to_string(d.scale) + "s";
  if (d.shift != 0) s += "-" + std::to_string(d.shift);
  return s;
}

}  // namespace

std::string dedekind_to_text(const DedekindFactor& d) {
  if (d.field_poly.degree() == 1) return "zeta(" + argument(d) + ")";
  return "zeta_{Q[X]/(" + d.field_poly.to_string() + ")}(" + argument(d) + ")";
}

std::string dedekind_to_latex(const DedekindFactor& d) {
  if (d.field_poly.degree() == 1) return "\\zeta(" + argument(d) + ")";
  std::string poly = d.field_poly.to_string("X");
  std::erase(poly, '*');
  return "\\zeta_{\\mathbf{Q}[X]/(" + poly + ")}(" + argument(d) + ")";
}

std::string global_to_text(const GlobalZetaExpression& g) {
  std::string s;
  for (const auto& d : g.dedekind_factors) {
    if (!s.empty()) s += " * ";
    s += dedekind_to_text(d);
  }
  return s.empty() ? "1" : s;
}

std::string global_to_latex(const GlobalZetaExpression& g) {
  std::string s;
  for (const auto& d : g.dedekind_factors) s += dedekind_to_latex(d);
  return s.empty() ? "1" : s;
}

json bad_primes_to_json(const BadPrimeSet& bad) {
  json primes = json::array();
  for (const auto& [p, reasons] : bad.primes()) {
    primes.push_back({{"prime", p}, {"reasons", std::vector<std::string>(reasons.begin(), reasons.end())}});
  }
  json unf = json::array();
  for (const auto& w : bad.unfactored()) unf.push_back({{"divides", w.value.get_str()}, {"reason", w.reason}});
  return {{"primes", primes}, {"unfactored", unf}};
}

std::string bad_primes_to_text(const BadPrimeSet& bad) {
  std::ostringstream out;
  for (const auto& [p, reasons] : bad.primes()) {
    out << "  p = " << p << ":";
    bool first = true;
    for (const auto& r : reasons) {
      out << (first ? " " : "; ") << r;
      first = false;
    }
    out << "\n";
  }
  for (const auto& w : bad.unfactored()) out << "  any p dividing " << w.value.get_str() << ": " << w.reason << "\n";
  return out.str();
}

json global_to_json(const GlobalZetaExpression& g) {
  json factors = json::array();
  for (const auto& d : g.dedekind_factors) {
    factors.push_back({{"field_poly", poly_to_json(d.field_poly)}, {"scale", d.scale}, {"shift", d.shift}});
  }
  return {{"dedekind_factors", factors}, {"bad_primes", bad_primes_to_json(g.bad_primes)}};
}

json fe_data_to_json(const FunctionalEquationData& d) {
  return {{"sign_exponent", d.sign_exponent}, {"q_exponent", d.q_exponent}, {"s_exponent", d.s_exponent}};
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace subzeta::io
