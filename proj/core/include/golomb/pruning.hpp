#pragma once

// Pruning of a Knot-variant prefix K(n): drop subtree 0 (keeping the initial
// leaf), shorten every chain of K_1..K_{m-1} by j labels, shrink the partial
// subtree K*_m by the three-case rule, then relabel in pre-order. The result
// is K(d) with d = n - s - w(n - j), and the total leaf weight falls by
// lambda*j.

#include <cstdint>
#include <vector>

#include "golomb/treemodel.hpp"

namespace golomb {

// How K*_m was shrunk.
enum class PruneCase {
  ManyChains = 1,  // >= 2 chains: j labels off every chain holding >= j
  FewChains = 2,   // < 2 chains, >= j labels: the j largest labels go
  Untouched = 3,   // < j labels: unchanged
};

struct PruneResult {
  PrefixView result;  // relabeled; result.n == d
  std::int64_t labels_removed = 0;
  std::int64_t d = 0;
  std::int64_t weight_drop = 0;
  PruneCase partial_case = PruneCase::Untouched;
};

// 3 + 2s + lambda*j: labels held by subtrees 0 and 1.
std::int64_t prune_threshold(const GolombParams& params);

// Requires view.n > prune_threshold and the Knot variant; throws
// std::invalid_argument otherwise.
PruneResult prune(const PrefixView& view);

// Same decomposition, chain multisets and partial shape. Both views must share
// variant and parameters (std::invalid_argument otherwise).
bool structurally_equal(const PrefixView& a, const PrefixView& b);

struct PruneCheck {
  std::int64_t n = 0;
  std::int64_t d_structural = 0;
  std::int64_t d_formula = 0;
  std::int64_t weight_drop = 0;
  bool shape_match = false;  // prune(K(n)) structurally equals K(d_formula)
  bool passed = false;
};

struct PruneReport {
  GolombParams params;
  std::vector<PruneCheck> rows;

  bool all_passed() const;
  std::int64_t failures() const;
};

// Checks every n in [n_first, n_last]; all must exceed prune_threshold.
// Failing rows are reported, not thrown.
PruneReport verify_prune_identity(const GolombParams& params, std::int64_t n_first,
                                  std::int64_t n_last);

}  // namespace golomb
