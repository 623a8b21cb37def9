#pragma once

#include <string>

#include <json.hpp>

#include "subzeta/bad_primes.hpp"
#include "subzeta/canonical.hpp"
#include "subzeta/matrix.hpp"
#include "subzeta/partition.hpp"
#include "subzeta/series.hpp"
#include "subzeta/zeta.hpp"

namespace subzeta::io {

using json = nlohmann::json;

/// Integers are written as JSON numbers when they fit into 64 bits and as
/// decimal strings otherwise; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

/// {"n": 2, "entries": [[0, 1], [0, 0]]}
IntMatrix matrix_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);

/// Coefficient array, lowest degree first.
IntPoly poly_from_json(const json& j);
json poly_to_json(const IntPoly& f);

/// Array of positive integers in any order.
Partition partition_from_json(const json& j);
json partition_to_json(const Partition& p);

/// [{"poly": [0, 1], "partition": [2, 1]}, ...]; an object carrying an "edv"
/// member (such as an analysis document) is accepted as well.
ElementaryDivisorVector edv_from_json(const json& j);
json edv_to_json(const ElementaryDivisorVector& edv);

/// [{"a": 0, "b": 1, "e": -1}, ...]
json product_to_json(const BinomialProduct& f);
BinomialProduct product_from_json(const json& j);
std::string product_to_latex(const BinomialProduct& f);

/// "zeta(2s-1)" or "zeta_{Q[X]/(X^2 + 1)}(s)".
std::string dedekind_to_text(const DedekindFactor& d);
/// "\zeta(2s-1)" or "\zeta_{\mathbf{Q}[X]/(X^2 + 1)}(s)".
std::string dedekind_to_latex(const DedekindFactor& d);
std::string global_to_text(const GlobalZetaExpression& g);
std::string global_to_latex(const GlobalZetaExpression& g);
json global_to_json(const GlobalZetaExpression& g);

json bad_primes_to_json(const BadPrimeSet& bad);
std::string bad_primes_to_text(const BadPrimeSet& bad);

json fe_data_to_json(const FunctionalEquationData& d);

/// Reads a whole file, or standard input for "-".
std::string read_source(const std::string& path);

}  // namespace subzeta::io
