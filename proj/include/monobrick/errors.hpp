#pragma once

#include <stdexcept>
#include <string>

namespace monobrick {

/// Enumeration request exceeds the configured size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematically invalid input: a non-monobrick diagram, a partition
/// violating NCL conditions, an arc illegal for the algebra.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace monobrick
