#pragma once

#include <stdexcept>
#include <string>

namespace rulesched {

/// Malformed input document (bad JSON, wrong shape, unknown field).
/// The message names the offending field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated value constraint in an instance, config or argument.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration request larger than the allowed combination budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rulesched
