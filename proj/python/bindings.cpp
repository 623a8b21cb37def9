// JSON crosses the language boundary so that arbitrary-size integers survive;
// the Python package decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subzeta/analysis.hpp"
#include "subzeta/campaign.hpp"
#include "subzeta/errors.hpp"

namespace py = pybind11;
using namespace subzeta;

namespace {

io::json ints_to_json(const std::vector<Int>& v) {
  io::json a = io::json::array();
  for (const auto& x : v) a.push_back(io::int_to_json(x));
  return a;
}

OracleOptions oracle_options(std::uint64_t budget, bool prune, int max_n) {
  OracleOptions o;
  o.budget = budget;
  o.prune = prune;
  o.max_n = max_n;
  return o;
}

}  // namespace

PYBIND11_MODULE(_subzeta, m) {
  m.doc() = "Submodule zeta functions of integer matrices";

  py::register_exception<DegreeCapExceeded>(m, "DegreeCapExceeded", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<BadPrimeError>(m, "BadPrimeError", PyExc_ValueError);

  m.def("analyze_json", [](const std::string& matrix, int degree_cap) {
    return to_json(analyze(io::matrix_from_json(io::json::parse(matrix)), degree_cap)).dump();
  });
  m.def("analyze_edv_json", [](const std::string& edv, int degree_cap) {
    return to_json(analyze(io::edv_from_json(io::json::parse(edv)), degree_cap)).dump();
  });
  m.def("render_json", [](const std::string& matrix, const std::string& format, int degree_cap) {
    return render(analyze(io::matrix_from_json(io::json::parse(matrix)), degree_cap), parse_format(format));
  });
  m.def("verify_json", [](const std::string& matrix, const std::vector<std::uint64_t>& primes, int max_exp,
                          std::uint64_t budget, bool prune, int max_n) {
    py::gil_scoped_release release;
    const IntMatrix a = io::matrix_from_json(io::json::parse(matrix));
    return to_json(verify(a, primes, max_exp, oracle_options(budget, prune, max_n))).dump();
  });
  m.def("count_json", [](const std::string& matrix, std::uint64_t p, int max_exp, std::uint64_t budget, bool prune,
                         int max_n) {
    py::gil_scoped_release release;
    const IntMatrix a = io::matrix_from_json(io::json::parse(matrix));
    return ints_to_json(count_invariant_sublattices(a, p, max_exp, oracle_options(budget, prune, max_n)).values).dump();
  });
  m.def("w_lambda_json", [](const std::vector<int>& parts) { return io::product_to_json(w_lambda(Partition(parts))).dump(); });
  m.def("zpxn_zeta_json", [](int n) { return io::product_to_json(zpxn_zeta(n)).dump(); });
  m.def("local_euler_factor_json", [](const std::string& edv, std::uint64_t p) {
    return io::product_to_json(local_euler_factor(io::edv_from_json(io::json::parse(edv)), p)).dump();
  });
  m.def("coefficients_json", [](const std::string& product, std::uint64_t p, int max_exp) {
    return ints_to_json(dirichlet_coefficients(io::product_from_json(io::json::parse(product)), p, max_exp).values).dump();
  });
  m.def("powerseries_json", [](int n) {
    auto a = powerseries_ring_coeffs(n);
    a.erase(a.begin());
    return ints_to_json(a).dump();
  });
  m.def("functional_equation", [](const std::vector<int>& parts) {
    const ElementaryDivisorVector edv({{IntPoly({0, 1}), Partition(parts)}});
    const auto d = functional_equation_data(edv, 2);
    const bool holds = verify_functional_equation(local_euler_factor(edv, 2), d);
    return py::make_tuple(d.sign_exponent, d.q_exponent, d.s_exponent, holds);
  });
  m.def("exceptional_json", [](int e, std::uint64_t p, int max_exp) {
    return ints_to_json(exceptional_2x2_coefficients(e, p, max_exp).values).dump();
  });
  m.def("campaign_json", [](int count, std::uint64_t seed, int max_exp) {
    py::gil_scoped_release release;
    CampaignOptions o;
    o.count = count;
    o.seed = seed;
    o.max_exp = max_exp;
    const CampaignReport r = run_campaign(o);
    return io::json{{"matrices", r.cases.size()}, {"mismatches", r.mismatches}, {"rejected", r.rejected}}.dump();
  });
}
