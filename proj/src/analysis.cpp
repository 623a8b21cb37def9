#include "subzeta/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace subzeta {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or latex)");
}

namespace {

AnalysisDocument finish(AnalysisDocument doc, BadPrimeSet bad) {
  doc.global = global_formula(doc.edv, std::move(bad));
  doc.abscissa = abscissa(doc.edv);
  doc.pole_at_zero = has_simple_pole_at_zero(doc.edv);
  for (std::uint64_t p : doc.global.bad_primes.good_primes(kFunctionalEquationSamples)) {
    FunctionalEquationSample sample;
    sample.prime = p;
    sample.data = functional_equation_data(doc.edv, p);
    sample.holds = verify_functional_equation(local_euler_factor(doc.edv, p), sample.data);
    doc.functional_equation.push_back(sample);
  }
  return doc;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisDocument analyze(const IntMatrix& a, int degree_cap) {
  if (a.rows() == 0) throw std::invalid_argument("matrix must have n >= 1");
  MatrixAnalysis analysis = analyze_matrix(a, degree_cap);
  AnalysisDocument doc;
  doc.matrix = a;
  doc.edv = analysis.edv;
  return finish(std::move(doc), heuristic_bad_primes(analysis));
}

AnalysisDocument analyze(const ElementaryDivisorVector& edv, int degree_cap) {
  for (const auto& e : edv.entries()) {
    if (e.poly.degree() > degree_cap) continue;
    const auto factors = factor_over_Z(e.poly, degree_cap);
    if (factors.size() != 1 || factors[0].multiplicity != 1) {
      throw std::invalid_argument(e.poly.to_string() + " is not irreducible over Q");
    }
  }
  AnalysisDocument doc;
  doc.edv = edv;
  return finish(std::move(doc), heuristic_bad_primes(edv));
}

io::json to_json(const AnalysisDocument& doc) {
  io::json fe = io::json::array();
  for (const auto& s : doc.functional_equation) {
    io::json item = io::fe_data_to_json(s.data);
    item["prime"] = s.prime;
    item["holds"] = s.holds;
    fe.push_back(item);
  }
  io::json j;
  if (doc.matrix) j["matrix"] = io::matrix_to_json(*doc.matrix);
  j["edv"] = io::edv_to_json(doc.edv);
  j["global"] = io::global_to_json(doc.global);
  j["global_text"] = io::global_to_text(doc.global);
  j["global_latex"] = io::global_to_latex(doc.global);
  j["alpha"] = doc.abscissa.alpha;
  j["beta"] = doc.abscissa.beta;
  j["functional_equation"] = fe;
  j["simple_pole_at_zero"] = doc.pole_at_zero;
  return j;
}

std::string to_text(const AnalysisDocument& doc) {
  std::ostringstream out;
  if (doc.matrix) out << "matrix:        " << io::matrix_to_json(*doc.matrix).at("entries").dump() << "\n";
  out << "edv:           " << doc.edv.to_string() << "\n";
  out << "zeta:          " << io::global_to_text(doc.global) << "\n";
  out << "alpha:         " << doc.abscissa.alpha << "\n";
  out << "beta:          " << doc.abscissa.beta << "\n";
  out << "pole at zero:  " << yes_no(doc.pole_at_zero) << "\n";
  for (const auto& s : doc.functional_equation) {
    out << "functional equation at p = " << s.prime << ": sign (-1)^" << s.data.sign_exponent << ", q^"
        << s.data.q_exponent << ", t^" << s.data.s_exponent << ", holds: " << yes_no(s.holds) << "\n";
  }
  out << "bad primes:\n" << io::bad_primes_to_text(doc.global.bad_primes);
  return out.str();
}

std::string to_latex(const AnalysisDocument& doc) {
  std::ostringstream out;
  out << "\\zeta_A(s) = " << io::global_to_latex(doc.global) << "\n";
  out << "\\alpha = " << doc.abscissa.alpha << ", \\quad \\beta = " << doc.abscissa.beta << "\n";
  for (const auto& s : doc.functional_equation) {
    out << "\\left.\\zeta_{A,p}\\right|_{q \\to q^{-1}} = (-1)^{" << s.data.sign_exponent << "} q^{"
        << s.data.q_exponent << "} t^{" << s.data.s_exponent << "} \\zeta_{A,p} \\quad (p = " << s.prime << ")\n";
  }
  return out.str();
}

std::string render(const AnalysisDocument& doc, Format format) {
  switch (format) {
    case Format::json: return to_json(doc).dump(2) + "\n";
    case Format::latex: return to_latex(doc);
    case Format::text: break;
  }
  return to_text(doc);
}

bool VerifyReport::has_demotion() const {
  return std::any_of(comparisons.begin(), comparisons.end(), [](const ComparisonReport& r) { return r.demoted; });
}

namespace {

std::optional<int> exceptional_exponent(const IntMatrix& a, std::uint64_t p) {
  if (a.rows() != 2 || a(0, 0) != 0 || a(1, 0) != 0 || a(1, 1) != 0 || a(0, 1) == 0) return std::nullopt;
  Int x = abs(a(0, 1));
  int e = 0;
  const Int pp(std::to_string(p));
  while (x % pp == 0) {
    x /= pp;
    ++e;
  }
  return e;
}

io::json ints_to_json(const std::vector<Int>& v) {
  io::json a = io::json::array();
  for (const auto& x : v) a.push_back(io::int_to_json(x));
  return a;
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

}  // namespace

VerifyReport verify(const IntMatrix& a, const std::vector<std::uint64_t>& primes, int max_exp,
                    const OracleOptions& options, int degree_cap) {
  if (a.rows() == 0) throw std::invalid_argument("matrix must have n >= 1");
  const MatrixAnalysis analysis = analyze_matrix(a, degree_cap);
  VerifyReport report;
  report.bad_primes = heuristic_bad_primes(analysis);
  for (std::uint64_t p : primes) {
    report.comparisons.push_back(compare(analysis, report.bad_primes, p, max_exp, options));
    std::optional<bool> exceptional;
    if (const auto e = exceptional_exponent(a, p)) {
      exceptional = exceptional_2x2_coefficients(*e, p, max_exp).values == report.comparisons.back().oracle;
    }
    report.exceptional_matches.push_back(exceptional);
  }
  return report;
}

io::json to_json(const VerifyReport& report) {
  io::json rows = io::json::array();
  for (std::size_t i = 0; i < report.comparisons.size(); ++i) {
    const auto& r = report.comparisons[i];
    io::json row = {{"prime", r.prime},
                    {"max_exp", r.max_exp},
                    {"formula", ints_to_json(r.formula)},
                    {"oracle", ints_to_json(r.oracle)},
                    {"match", r.matches()},
                    {"heuristically_bad", r.heuristically_bad},
                    {"bad_reasons", r.bad_reasons},
                    {"demoted", r.demoted}};
    row["formula_factor"] = r.formula_factor ? io::product_to_json(*r.formula_factor) : io::json(nullptr);
    row["first_mismatch"] = r.first_mismatch ? io::json(*r.first_mismatch) : io::json(nullptr);
    if (report.exceptional_matches[i]) row["exceptional_match"] = *report.exceptional_matches[i];
    rows.push_back(row);
  }
  return {{"comparisons", rows}, {"bad_primes", io::bad_primes_to_json(report.bad_primes)},
          {"ok", !report.has_demotion()}};
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "prime" << std::setw(8) << "status" << std::setw(8) << "match"
      << "formula / oracle\n";
  for (std::size_t i = 0; i < report.comparisons.size(); ++i) {
    const auto& r = report.comparisons[i];
    const std::string status = r.demoted ? "DEMOTED" : (r.heuristically_bad ? "bad" : "good");
    out << std::setw(8) << r.prime << std::setw(8) << status << std::setw(8) << yes_no(r.matches())
        << join(r.formula) << "\n";
    out << std::setw(24) << "" << join(r.oracle) << "\n";
    if (r.formula_factor) out << std::setw(24) << "" << "factor " << r.formula_factor->to_string() << "\n";
    if (report.exceptional_matches[i]) {
      out << std::setw(24) << "" << "exceptional factor match: " << yes_no(*report.exceptional_matches[i]) << "\n";
    }
    for (const auto& reason : r.bad_reasons) out << std::setw(24) << "" << reason << "\n";
  }
  return out.str();
}

std::string render(const VerifyReport& report, Format format) {
  if (format == Format::json) return to_json(report).dump(2) + "\n";
  return to_text(report);
}

std::string coefficient_table(const std::vector<Int>& coeffs) {
  std::ostringstream out;
  const int width = static_cast<int>(std::to_string(coeffs.size()).size()) + 2;
  for (std::size_t m = 1; m < coeffs.size(); ++m) out << std::right << std::setw(width) << m << "  " << coeffs[m] << "\n";
  return out.str();
}

}  // namespace subzeta
