#include "subzeta/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "subzeta/errors.hpp"
#include "subzeta/zeta.hpp"

namespace subzeta {
namespace {

using i128 = __int128;

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      c[static_cast<std::size_t>(idx)] = left;
      fn(c);
      return;
    }
    for (int v = left; v >= 0; --v) {
      c[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) fn(c);
    return;
  }
  rec(0, total);
}

// Enumerates the HNF candidates of one diagonal composition with integer
// type T wide enough for every intermediate value.
template <class T>
class CompositionScan {
 public:
  CompositionScan(const std::vector<T>& a, int n, std::vector<T> diag)
      : a_(a), n_(n), diag_(std::move(diag)), b_(static_cast<std::size_t>(n * n), T(0)) {
    for (int i = 0; i < n_; ++i) at(i, i) = diag_[static_cast<std::size_t>(i)];
  }

  // Returns (invariant count, visited count).
  std::pair<std::uint64_t, std::uint64_t> run(bool prune) {
    count_ = 0;
    visited_ = 0;
    if (prune) {
      descend(0);
    } else {
      exhaust();
    }
    return {count_, visited_};
  }

 private:
  T& at(int i, int j) { return b_[static_cast<std::size_t>(i * n_ + j)]; }

  // Forward substitution of x B = b_r A through the first `upto` columns.
  bool row_ok(int r, int upto) {
    T x[16];
    for (int j = 0; j < upto; ++j) {
      T v = 0;
      for (int k = r; k < n_; ++k) v += at(r, k) * a_[static_cast<std::size_t>(k * n_ + j)];
      for (int i = 0; i < j; ++i) v -= x[i] * at(i, j);
      const T& d = diag_[static_cast<std::size_t>(j)];
      if (v % d != 0) return false;
      x[j] = v / d;
    }
    return true;
  }

  bool full_check() {
    for (int r = 0; r < n_; ++r) {
      if (!row_ok(r, n_)) return false;
    }
    return true;
  }

  void exhaust() {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) pos.emplace_back(i, j);
    while (true) {
      ++visited_;
      if (full_check()) ++count_;
      // mixed-radix increment, last position fastest
      std::size_t k = pos.size();
      while (k > 0) {
        auto [i, j] = pos[k - 1];
        T& e = at(i, j);
        e += 1;
        if (e < diag_[static_cast<std::size_t>(j)]) break;
        e = 0;
        --k;
      }
      if (k == 0) return;
    }
  }

  // Row-by-row enumeration: once rows 0..i are fixed, the first i+1
  // substitution steps of each of those rows are determined.
  void descend(int i) {
    if (i == n_) {
      ++count_;
      return;
    }
    std::vector<int> cols;
    for (int j = i + 1; j < n_; ++j) cols.push_back(j);
    for (int j : cols) at(i, j) = 0;
    while (true) {
      ++visited_;
      bool ok = true;
      for (int r = 0; r <= i && ok; ++r) ok = row_ok(r, i + 1);
      if (ok) descend(i + 1);
      std::size_t k = cols.size();
      while (k > 0) {
        T& e = at(i, cols[k - 1]);
        e += 1;
        if (e < diag_[static_cast<std::size_t>(cols[k - 1])]) break;
        e = 0;
        --k;
      }
      if (k == 0) return;
    }
  }

  const std::vector<T>& a_;
  int n_;
  std::vector<T> diag_;
  std::vector<T> b_;
  std::uint64_t count_ = 0;
  std::uint64_t visited_ = 0;
};

template <class T>
T convert(const Int& v) {
  if constexpr (std::is_same_v<T, Int>) {
    return v;
  } else if constexpr (std::is_same_v<T, std::int64_t>) {
    return v.get_si();
  } else {
    // __int128 from a value known to fit
    const bool neg = v < 0;
    Int m = abs(v);
    Int hi = m >> 64;
    Int lo = m - (hi << 64);
    i128 r = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
    return neg ? -r : r;
  }
}

struct Job {
  int e;
  std::vector<int> composition;
};

template <class T>
OracleStats run_scan(const IntMatrix& a, std::uint64_t p, int max_exp, const OracleOptions& options) {
  const int n = static_cast<int>(a.rows());
  std::vector<T> flat;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) flat.push_back(convert<T>(a(i, j)));

  std::vector<Job> jobs;
  for (int e = 0; e <= max_exp; ++e) {
    for_each_composition(e, n, [&](const std::vector<int>& c) { jobs.push_back({e, c}); });
  }
  std::vector<std::uint64_t> counts(jobs.size(), 0);
  std::vector<std::uint64_t> visits(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      std::vector<T> diag;
      for (int ei : jobs[k].composition) diag.push_back(convert<T>(ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(ei))));
      CompositionScan<T> scan(flat, n, std::move(diag));
      std::tie(counts[k], visits[k]) = scan.run(options.prune);
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  OracleStats stats;
  stats.counts.prime = p;
  stats.counts.values.assign(static_cast<std::size_t>(max_exp) + 1, Int(0));
  stats.visited.assign(static_cast<std::size_t>(max_exp) + 1, 0);
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto e = static_cast<std::size_t>(jobs[k].e);
    stats.counts.values[e] += static_cast<unsigned long>(counts[k]);
    stats.visited[e] += visits[k];
  }
  return stats;
}

}  // namespace

std::vector<Int> hnf_candidate_counts(int n, std::uint64_t p, int max_exp) {
  std::vector<Int> out(static_cast<std::size_t>(max_exp) + 1, Int(0));
  const Int pp(static_cast<unsigned long>(p));
  for (int e = 0; e <= max_exp; ++e) {
    for_each_composition(e, n, [&](const std::vector<int>& c) {
      unsigned long exp = 0;
      for (int j = 0; j < n; ++j) exp += static_cast<unsigned long>(j) * static_cast<unsigned long>(c[static_cast<std::size_t>(j)]);
      out[static_cast<std::size_t>(e)] += ipow(pp, exp);
    });
  }
  return out;
}

OracleStats count_invariant_sublattices_stats(const IntMatrix& a, std::uint64_t p, int max_exp,
                                              const OracleOptions& options) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("oracle expects a non-empty square matrix");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (max_exp < 0) throw std::invalid_argument("maximal index exponent must be non-negative");
  const int n = static_cast<int>(a.rows());
  if (n > options.max_n || n > 16) {
    throw BudgetExceeded("matrix size " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(options.max_n));
  }
  Int total = 0;
  for (const auto& c : hnf_candidate_counts(n, p, max_exp)) total += c;
  if (total > Int(static_cast<unsigned long>(options.budget))) {
    throw BudgetExceeded("oracle would test " + total.get_str() + " candidates, budget is " +
                         std::to_string(options.budget));
  }
  // Magnitude bound for the substitution: entries of b_r A are at most
  // n * max|A| * p^E and the partial solutions at most 2^n times that.
  Int max_a = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) max_a = std::max(max_a, Int(abs(a(i, j))));
  const Int pe = ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(max_exp));
  const Int bound = Int(n) * max_a * pe * ipow(Int(2), static_cast<unsigned long>(n + 1)) * pe * Int(n + 1);
  if (bound < ipow(Int(2), 62)) return run_scan<std::int64_t>(a, p, max_exp, options);
  if (bound < ipow(Int(2), 125)) return run_scan<i128>(a, p, max_exp, options);
  return run_scan<Int>(a, p, max_exp, options);
}

DirichletCoefficients count_invariant_sublattices(const IntMatrix& a, std::uint64_t p, int max_exp,
                                                  const OracleOptions& options) {
  return count_invariant_sublattices_stats(a, p, max_exp, options).counts;
}

std::optional<int> first_mismatch(const std::vector<Int>& x, const std::vector<Int>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) return static_cast<int>(i);
  }
  if (x.size() != y.size()) return static_cast<int>(n);
  return std::nullopt;
}

ComparisonReport compare(const MatrixAnalysis& analysis, BadPrimeSet& bad, std::uint64_t p, int max_exp,
                         const OracleOptions& options) {
  ComparisonReport rep;
  rep.prime = p;
  rep.max_exp = max_exp;
  rep.heuristically_bad = bad.contains(p);
  rep.bad_reasons = bad.reasons(p);
  try {
    rep.formula_factor = local_euler_factor(analysis.edv, p);
    rep.formula = dirichlet_coefficients(*rep.formula_factor, p, max_exp).values;
  } catch (const BadPrimeError&) {
    rep.formula_factor.reset();
  }
  rep.oracle = count_invariant_sublattices(analysis.matrix, p, max_exp, options).values;
  rep.first_mismatch = first_mismatch(rep.formula, rep.oracle);
  if (!rep.matches() && !rep.heuristically_bad) {
    rep.demoted = true;
    bad.add(p, "demoted: oracle counts disagree with the generic Euler factor");
    rep.bad_reasons = bad.reasons(p);
  }
  return rep;
}

ComparisonReport compare(const IntMatrix& a, std::uint64_t p, int max_exp, const OracleOptions& options) {
  const MatrixAnalysis analysis = analyze_matrix(a);
  BadPrimeSet bad = heuristic_bad_primes(analysis);
  return compare(analysis, bad, p, max_exp, options);
}

}  // namespace subzeta
