#pragma once

#include <stdexcept>
#include <string>

namespace arithjet {

// A computation ran out of one of the declared budgets (p-precision, jet
// order, series degree, limit stage). Recoverable by re-running with a
// larger budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical precondition failed (non-unit where a unit is required,
// division not exact, prime mismatch, shape violation).
struct math_error : std::runtime_error {
  explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace arithjet
