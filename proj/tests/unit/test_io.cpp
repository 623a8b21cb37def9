#include <doctest.h>

#include "subzeta/analysis.hpp"
#include "subzeta/normal_forms.hpp"

using namespace subzeta;

TEST_CASE("matrix JSON") {
  const auto m = io::matrix_from_json(io::json::parse(R"({"n": 2, "entries": [[0, "12345678901234567890123"], [1, -2]]})"));
  CHECK(m(0, 1) == Int("12345678901234567890123"));
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
  CHECK(io::matrix_to_json(m)["entries"][0][1].is_string());
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"n": 3, "entries": [[1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"entries": [[1, 2]]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"entries": []})")), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"entries": [[1.5]]})")), std::invalid_argument);
}

TEST_CASE("EDV JSON") {
  const auto v = io::edv_from_json(io::json::parse(R"([{"poly": [0, 1], "partition": [1, 2]}])"));
  CHECK(v[0].partition == Partition({2, 1}));
  CHECK(io::edv_from_json(io::edv_to_json(v)) == v);
  CHECK(io::edv_from_json(io::json{{"edv", io::edv_to_json(v)}}) == v);
  CHECK_THROWS(io::edv_from_json(io::json::parse(R"([{"poly": [0, 1], "partition": [0]}])")));
  CHECK_THROWS(io::edv_from_json(io::json::parse("[]")));
}

TEST_CASE("renderings") {
  const DedekindFactor gauss{IntPoly{1, 0, 1}, 1, 0};
  CHECK(io::dedekind_to_text(gauss) == "zeta_{Q[X]/(X^2 + 1)}(s)");
  CHECK(io::dedekind_to_latex(gauss) == "\\zeta_{\\mathbf{Q}[X]/(X^2 + 1)}(s)");
  CHECK(io::dedekind_to_latex({IntPoly{2, 3, 1}, 1, 0}) == "\\zeta_{\\mathbf{Q}[X]/(X^2 + 3X + 2)}(s)");
  const auto g = global_formula(ElementaryDivisorVector({{IntPoly{0, 1}, Partition({2, 1})}}), {});
  CHECK(io::global_to_text(g) == "zeta(s) * zeta(s-1) * zeta(2s-2)");
  CHECK(io::global_to_latex(g) == "\\zeta(s)\\zeta(s-1)\\zeta(2s-2)");
  CHECK(io::product_to_latex(zpxn_zeta(2)) == "(1 - t)^{-1}(1 - qt^{2})^{-1}");
  CHECK(io::product_from_json(io::product_to_json(zpxn_zeta(4))) == zpxn_zeta(4));
}

TEST_CASE("analysis documents") {
  const auto zero = analyze(IntMatrix(2, 2));
  CHECK(io::global_to_text(zero.global) == "zeta(s) * zeta(s-1)");
  CHECK(zero.abscissa == Abscissa{2, 1});
  CHECK(zero.pole_at_zero);
  REQUIRE(zero.functional_equation.size() == kFunctionalEquationSamples);
  for (const auto& s : zero.functional_equation) CHECK(s.holds);

  const auto n21 = analyze(n_of(Partition({2, 1})));
  CHECK(io::global_to_text(n21.global) == "zeta(s) * zeta(s-1) * zeta(2s-2)");
  CHECK(n21.abscissa == Abscissa{2, 1});

  const auto gauss = analyze(companion(IntPoly{1, 0, 1}));
  CHECK(io::global_to_text(gauss.global) == "zeta_{Q[X]/(X^2 + 1)}(s)");
  CHECK(gauss.abscissa == Abscissa{1, 1});
  CHECK_FALSE(gauss.pole_at_zero);
  CHECK(gauss.global.bad_primes.contains(2));
  CHECK_FALSE(gauss.global.bad_primes.contains(3));
}

TEST_CASE("analysis JSON re-read as an EDV reproduces the formula") {
  for (const IntMatrix& a : std::vector<IntMatrix>{IntMatrix(3, 3), n_of(Partition({3, 1})), IntMatrix{{1, 2, 0}, {0, 1, 0}, {3, 0, -1}},
                             block_diag(companion(IntPoly{1, 0, 1}), IntMatrix{{2}})}) {
    const auto doc = analyze(a);
    const auto reparsed = analyze(io::edv_from_json(io::json::parse(to_json(doc).dump())));
    CHECK(reparsed.edv == doc.edv);
    CHECK(reparsed.global.dedekind_factors == doc.global.dedekind_factors);
    CHECK(reparsed.abscissa == doc.abscissa);
  }
}

TEST_CASE("supplied EDVs are checked for irreducibility") {
  CHECK_THROWS_AS(analyze(ElementaryDivisorVector({{IntPoly{-1, 0, 1}, Partition({1})}})), std::invalid_argument);
}

TEST_CASE("verify reports") {
  const auto r = verify(IntMatrix{{0, 2}, {0, 0}}, {2, 3}, 4);
  REQUIRE(r.comparisons.size() == 2);
  CHECK_FALSE(r.comparisons[0].matches());
  CHECK(r.exceptional_matches[0] == true);
  CHECK(r.comparisons[1].matches());
  CHECK(r.exceptional_matches[1] == true);
  CHECK_FALSE(r.has_demotion());
  CHECK(to_json(r)["ok"] == true);
  CHECK(parse_format("latex") == Format::latex);
  CHECK_THROWS(parse_format("xml"));
}
