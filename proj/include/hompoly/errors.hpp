#pragma once

#include <stdexcept>
#include <string>

namespace hompoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search or enumeration would exceed its configured limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class MissingEdge : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Raised when a reduction produces a value its construction rules out,
// e.g. an odd coefficient before the factor-2 division.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class UnboundOracle : public Error {
 public:
  using Error::Error;
};

/// Resource limits shared by every search in the library. The defaults are
/// sized for desk-scale inputs; `from_env` applies HOMPOLY_BUDGET, which
/// overrides the subset limit.
struct Budget {
  unsigned long long max_subsets = 1ULL << 22;
  unsigned long long hom_nodes = 10'000'000ULL;
  unsigned long long rotation_systems = 2'000'000ULL;
  unsigned long long circuit_cost = 16'000'000ULL;

  static Budget from_env();
};

}  // namespace hompoly
