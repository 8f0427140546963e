#pragma once

// Cross-verification of recursion, tree leaf weights and closed forms over a
// parameter grid.

#include <cstdint>
#include <string>
#include <vector>

namespace golomb {

struct VerifyGrid {
  std::int64_t j_max = 3;
  std::int64_t s_max = 3;
  std::int64_t lambda_max = 3;
  std::int64_t n_tree = 2000;     // tree, pruning and recursion checks
  std::int64_t n_closed = 20000;  // lambda = 1 closed-form checks
  std::int64_t n_structural = 3000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs every check; grid cells are evaluated concurrently but outcomes come
// back in a fixed order.
std::vector<CheckOutcome> run_verification(const VerifyGrid& grid);

}  // namespace golomb
