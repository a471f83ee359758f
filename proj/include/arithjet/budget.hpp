#pragma once

#include <cstdint>

#include "arithjet/errors.hpp"

namespace arithjet {

// Working budgets for a computation: every operation derives the precision
// of its output from these, losses are tracked explicitly and never hidden.
struct Budget {
  long p = 5;    // odd prime, 5 <= p <= 13
  long N = 8;    // absolute p-adic precision
  long n = 4;    // maximal jet order
  long D = 150;  // series degree bound
  long Q = 50;   // q-expansion degree bound
  long M = 6;    // maximal direct-limit / tower stage

  void validate() const {
    if (p < 5 || p > 13 || p % 2 == 0 || p == 9)
      throw math_error("unsupported prime (need p in {5,7,11,13})");
    if (N < 1) throw budget_error("p-adic precision must be positive");
    if (n < 0) throw budget_error("jet order budget must be non-negative");
    if (D < 0 || Q < 0) throw budget_error("degree budgets must be non-negative");
    if (M < 0) throw budget_error("stage budget must be non-negative");
  }
};

}  // namespace arithjet
