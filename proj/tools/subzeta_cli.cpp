// subzeta: submodule zeta functions of integer matrices.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification mismatch at a
// heuristically good prime, 3 oracle budget exceeded.

#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subzeta/analysis.hpp"
#include "subzeta/campaign.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/io.hpp"

using namespace subzeta;

namespace {

constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kBudget = 3;

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  static const std::regex number("[0-9]+");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    parts.push_back(std::stoi(it->str()));
  }
  if (parts.empty()) throw std::invalid_argument("empty partition '" + text + "'");
  return Partition(std::move(parts));
}

BinomialProduct w_product(const std::vector<std::string>& parts) {
  BinomialProduct f;
  for (const auto& p : parts) f = f * w_lambda(parse_partition(p));
  return f;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_product(const BinomialProduct& f, Format format) {
  switch (format) {
    case Format::json: std::cout << io::product_to_json(f).dump() << "\n"; break;
    case Format::latex: std::cout << io::product_to_latex(f) << "\n"; break;
    case Format::text: std::cout << f.to_string() << "\n"; break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodule zeta functions of integer matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int degree_cap = kDefaultDegreeCap;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->envname("SUBZETA_FORMAT");
  app.add_option("--degree-cap", degree_cap, "Largest minimal-polynomial degree factored over Q")
      ->envname("SUBZETA_DEGREE_CAP");

  std::string input = "-";
  std::string edv_path;
  auto* analyze = app.add_subcommand("analyze", "Global formula, abscissa and functional equation of a matrix");
  analyze->add_option("input", input, "Matrix JSON file, or - for standard input");
  analyze->add_option("--edv", edv_path, "Elementary divisor vector JSON, bypassing factorization")
      ->envname("SUBZETA_EDV");

  std::vector<std::uint64_t> primes{2, 3, 5};
  int max_exp = 4;
  OracleOptions oracle;
  auto add_oracle_flags = [](CLI::App* cmd, OracleOptions& oracle, int& max_exp) {
    cmd->add_option("--max-index-exp", max_exp, "Count sublattices of index p^e for e <= E")
        ->check(CLI::Range(0, 64))
        ->envname("SUBZETA_MAX_INDEX_EXP");
    cmd->add_option("--budget", oracle.budget, "Maximum number of HNF candidates per prime")
        ->envname("SUBZETA_BUDGET");
    cmd->add_option("--max-n", oracle.max_n, "Largest matrix size the oracle accepts")->envname("SUBZETA_MAX_N");
    cmd->add_flag("--prune", oracle.prune, "Reject partial bases row by row")->envname("SUBZETA_PRUNE");
    cmd->add_option("--threads", oracle.threads, "Oracle worker threads (0: all cores)")->envname("SUBZETA_THREADS");
  };
  auto* verify_cmd = app.add_subcommand("verify", "Compare the local formula with brute-force sublattice counts");
  verify_cmd->add_option("input", input, "Matrix JSON file, or - for standard input");
  verify_cmd->add_option("--primes", primes, "Primes to test")->delimiter(',')->envname("SUBZETA_PRIMES");
  add_oracle_flags(verify_cmd, oracle, max_exp);

  CampaignOptions campaign;
  campaign.oracle.max_n = campaign.max_n;
  auto* campaign_cmd = app.add_subcommand("campaign", "Formula against oracle on seeded random matrices");
  campaign_cmd->add_option("--count", campaign.count, "Number of matrices")->envname("SUBZETA_COUNT");
  campaign_cmd->add_option("--seed", campaign.seed, "Random seed")->envname("SUBZETA_SEED");
  campaign_cmd->add_option("--min-n", campaign.min_n, "Smallest matrix size drawn")->envname("SUBZETA_MIN_N");
  campaign_cmd->add_option("--max-entry", campaign.max_entry, "Entries drawn from [-k, k]")->envname("SUBZETA_MAX_ENTRY");
  campaign_cmd->add_option("--good-primes", campaign.primes_per_matrix, "Good primes tested per matrix")
      ->envname("SUBZETA_GOOD_PRIMES");
  add_oracle_flags(campaign_cmd, campaign.oracle, campaign.max_exp);

  auto* special = app.add_subcommand("special", "Closed forms and identities");
  special->require_subcommand(1);
  int zpxn_n = 1;
  auto* zpxn = special->add_subcommand("zpxn", "Ideal zeta function of Z_p[X]/(X^n)");
  zpxn->add_option("n", zpxn_n)->required()->check(CLI::Range(1, 1000));
  int series_n = 16;
  auto* powerseries = special->add_subcommand("powerseries", "Coefficients a_1..a_N for Z[[X]]");
  powerseries->add_option("N", series_n)->required()->check(CLI::Range(1, 10'000'000));
  std::vector<std::string> fe_types;
  auto* fe_check = special->add_subcommand("fe-check", "Functional equation of the nilpotent type lambda");
  fe_check->add_option("lambda", fe_types, "Partitions such as 2,2,1")->required();
  std::vector<std::string> identity_args;
  auto* w_identity = special->add_subcommand("w-identity", "Compare products of W_lambda: LHS... = RHS...");
  w_identity->add_option("terms", identity_args, "Defaults to 2,2,1 3,1 = 2,2 3,1,1");

  CLI11_PARSE(app, argc, argv);

  campaign.max_n = campaign.oracle.max_n;

  try {
    const Format format = parse_format(format_name);

    if (analyze->parsed()) {
      AnalysisDocument doc = edv_path.empty()
                                 ? subzeta::analyze(io::matrix_from_json(io::json::parse(io::read_source(input))), degree_cap)
                                 : subzeta::analyze(io::edv_from_json(io::json::parse(io::read_source(edv_path))), degree_cap);
      std::cout << render(doc, format);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const IntMatrix a = io::matrix_from_json(io::json::parse(io::read_source(input)));
      const VerifyReport report = subzeta::verify(a, primes, max_exp, oracle, degree_cap);
      std::cout << render(report, format);
      return report.has_demotion() ? kMismatch : 0;
    }

    if (campaign_cmd->parsed()) {
      const CampaignReport report = run_campaign(campaign);
      if (format == Format::json) {
        io::json cases = io::json::array();
        for (const auto& c : report.cases) {
          VerifyReport v{c.comparisons, std::vector<std::optional<bool>>(c.comparisons.size()), {}};
          cases.push_back({{"matrix", io::matrix_to_json(c.matrix)}, {"comparisons", to_json(v).at("comparisons")}});
        }
        std::cout << io::json{{"seed", campaign.seed}, {"cases", cases}, {"mismatches", report.mismatches},
                              {"rejected", report.rejected}}
                         .dump(2)
                  << "\n";
      } else {
        for (const auto& c : report.cases) {
          std::cout << io::matrix_to_json(c.matrix).at("entries").dump() << "  primes";
          for (const auto& r : c.comparisons) std::cout << " " << r.prime << (r.matches() ? "" : "(MISMATCH)");
          std::cout << "\n";
        }
        std::cout << "seed " << campaign.seed << ": " << report.cases.size() << " matrices, " << report.mismatches
                  << " mismatches, " << report.rejected << " draws rejected\n";
      }
      return report.mismatches == 0 ? 0 : kMismatch;
    }

    if (zpxn->parsed()) {
      print_product(zpxn_zeta(zpxn_n), format);
      return 0;
    }

    if (powerseries->parsed()) {
      const auto a = powerseries_ring_coeffs(series_n);
      if (format == Format::json) {
        io::json values = io::json::array();
        for (std::size_t m = 1; m < a.size(); ++m) values.push_back(io::int_to_json(a[m]));
        std::cout << values.dump() << "\n";
      } else {
        std::cout << coefficient_table(a);
      }
      return 0;
    }

    if (fe_check->parsed()) {
      bool all = true;
      io::json out = io::json::array();
      for (const auto& text : fe_types) {
        const Partition lambda = parse_partition(text);
        const ElementaryDivisorVector edv({{IntPoly({0, 1}), lambda}});
        const FunctionalEquationData data = functional_equation_data(edv, 2);
        const bool holds = verify_functional_equation(local_euler_factor(edv, 2), data);
        all = all && holds;
        if (format == Format::json) {
          io::json item = io::fe_data_to_json(data);
          item["lambda"] = lambda.parts();
          item["holds"] = holds;
          out.push_back(item);
        } else {
          std::cout << lambda.to_string() << ": " << (holds ? "true" : "false") << " (" << data.sign_exponent << ", "
                    << data.q_exponent << ", " << data.s_exponent << ")\n";
        }
      }
      if (format == Format::json) std::cout << out.dump(2) << "\n";
      return all ? 0 : kMismatch;
    }

    if (w_identity->parsed()) {
      if (identity_args.empty()) identity_args = {"2,2,1", "3,1", "=", "2,2", "3,1,1"};
      const auto eq = std::find(identity_args.begin(), identity_args.end(), "=");
      if (eq == identity_args.end()) throw std::invalid_argument("expected LHS... = RHS...");
      const BinomialProduct lhs = w_product({identity_args.begin(), eq});
      const BinomialProduct rhs = w_product({eq + 1, identity_args.end()});
      const bool equal = lhs == rhs;
      if (format == Format::json) {
        std::cout << io::json{{"lhs", io::product_to_json(lhs)}, {"rhs", io::product_to_json(rhs)}, {"equal", equal}}.dump(2)
                  << "\n";
      } else if (format == Format::latex) {
        std::cout << io::product_to_latex(lhs) << (equal ? " = " : " \\neq ") << io::product_to_latex(rhs) << "\n";
      } else {
        std::cout << "lhs:   " << lhs.to_string() << "\nrhs:   " << rhs.to_string() << "\nequal: " << yes_no(equal)
                  << "\n";
      }
      return equal ? 0 : kMismatch;
    }
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\nhint: supply the factorization with --edv <file>\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
