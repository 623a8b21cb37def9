#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subzeta/bad_primes.hpp"
#include "subzeta/canonical.hpp"
#include "subzeta/io.hpp"
#include "subzeta/oracle.hpp"
#include "subzeta/zeta.hpp"

namespace subzeta {

enum class Format { text, json, latex };

Format parse_format(const std::string& name);

/// Functional-equation exponents at one good prime. The q and s exponents
/// do not depend on the prime; the sign does, through the number of places.
struct FunctionalEquationSample {
  std::uint64_t prime = 0;
  FunctionalEquationData data;
  bool holds = false;
};

struct AnalysisDocument {
  std::optional<IntMatrix> matrix;
  ElementaryDivisorVector edv;
  GlobalZetaExpression global;
  Abscissa abscissa;
  std::vector<FunctionalEquationSample> functional_equation;
  bool pole_at_zero = false;
};

/// Number of good primes sampled for the functional equation.
inline constexpr std::size_t kFunctionalEquationSamples = 3;

AnalysisDocument analyze(const IntMatrix& a, int degree_cap = kDefaultDegreeCap);
/// Works from a supplied vector; each polynomial is checked for
/// irreducibility when its degree is within the cap.
AnalysisDocument analyze(const ElementaryDivisorVector& edv, int degree_cap = kDefaultDegreeCap);

io::json to_json(const AnalysisDocument& doc);
std::string to_text(const AnalysisDocument& doc);
std::string to_latex(const AnalysisDocument& doc);
std::string render(const AnalysisDocument& doc, Format format);

struct VerifyReport {
  std::vector<ComparisonReport> comparisons;
  /// For [[0, a], [0, 0]]: whether the oracle agrees with the exceptional
  /// factor at each compared prime (parallel to `comparisons`).
  std::vector<std::optional<bool>> exceptional_matches;
  BadPrimeSet bad_primes;

  /// True iff some heuristically good prime mismatched.
  bool has_demotion() const;
};

VerifyReport verify(const IntMatrix& a, const std::vector<std::uint64_t>& primes, int max_exp,
                    const OracleOptions& options = {}, int degree_cap = kDefaultDegreeCap);

io::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);
std::string render(const VerifyReport& report, Format format);

/// Coefficient table a_1..a_N with one "m a_m" row per line.
std::string coefficient_table(const std::vector<Int>& coeffs);

}  // namespace subzeta
