#pragma once

#include <stdexcept>
#include <string>

namespace caperiod {

// Caller supplied arguments outside an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters are well formed but no object with the requested properties exists
// (e.g. no set of distinct primes fits the state budget).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The node-visit / work budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace caperiod
