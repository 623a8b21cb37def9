#pragma once

#include <stdexcept>
#include <string>

namespace subzeta {

/// Rational factorization refused because the degree exceeds the cap.
class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration refused because it would exceed a configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A local formula was requested at a prime where it is undefined.
class BadPrimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subzeta
