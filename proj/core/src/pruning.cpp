#include "golomb/pruning.hpp"

#include <algorithm>
#include <stdexcept>

namespace golomb {

namespace {

void drop_empty_chains(SubtreeShape& sh) {
  std::erase(sh.chains, 0);
}

// Removes the `count` largest labels of a subtree with at most one chain.
// Pre-order puts them at the end of the chain, then the stem, then the
// supernode.
void remove_largest(SubtreeShape& sh, std::int64_t count) {
  if (!sh.chains.empty()) {
    const std::int64_t take = std::min(count, sh.chains.back());
    sh.chains.back() -= take;
    count -= take;
    drop_empty_chains(sh);
  }
  if (count > 0 && sh.stem) {
    sh.stem = false;
    --count;
  }
  sh.supernode_labels -= std::min(count, sh.supernode_labels);
}

}  // namespace

std::int64_t prune_threshold(const GolombParams& params) {
  return initial_condition_length(params);
}

PruneResult prune(const PrefixView& view) {
  if (view.variant != TreeVariant::Knot) {
    throw std::invalid_argument("pruning is defined for the knot variant only");
  }
  const GolombParams& p = view.params;
  if (view.n <= prune_threshold(p)) {
    throw std::invalid_argument("pruning needs n > 3+2s+lambda*j = " +
                                std::to_string(prune_threshold(p)));
  }

  PruneResult out;
  std::vector<SubtreeShape> kept;
  kept.reserve(view.subtrees.size());

  // Subtree 0 goes (the initial leaf survives); K_i becomes K_{i-1}.
  for (std::int64_t i = 1; i < view.m; ++i) {
    SubtreeShape sh = view.subtrees[static_cast<std::size_t>(i)];
    for (auto& c : sh.chains) c -= p.j;
    drop_empty_chains(sh);
    sh.index = i - 1;
    kept.push_back(std::move(sh));
  }

  SubtreeShape last = view.partial();
  const auto chains = static_cast<std::int64_t>(last.chains.size());
  if (chains >= 2) {
    out.partial_case = PruneCase::ManyChains;
    for (auto& c : last.chains) {
      if (c >= p.j) c -= p.j;
    }
    drop_empty_chains(last);
  } else if (last.label_count() >= p.j) {
    out.partial_case = PruneCase::FewChains;
    remove_largest(last, p.j);
  } else {
    out.partial_case = PruneCase::Untouched;
  }
  last.index = view.m - 1;
  if (last.label_count() > 0) kept.push_back(std::move(last));

  std::int64_t labels = 1;
  for (const auto& sh : kept) labels += sh.label_count();

  out.result = PrefixView{.variant = view.variant,
                          .params = p,
                          .n = labels,
                          .m = kept.empty() ? 0 : kept.back().index,
                          .subtrees = std::move(kept)};
  out.result.incomplete =
      out.result.subtrees.empty() ||
      out.result.partial() != full_subtree_shape(view.variant, p, out.result.m);
  out.d = labels;
  out.labels_removed = view.n - labels;
  out.weight_drop = leaf_weight(view) - leaf_weight(out.result);
  return out;
}

bool structurally_equal(const PrefixView& a, const PrefixView& b) {
  if (a.variant != b.variant || a.params != b.params) {
    throw std::invalid_argument("structurally_equal needs matching variant and parameters");
  }
  return a.n == b.n && a.m == b.m && a.subtrees == b.subtrees;
}

bool PruneReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const PruneCheck& r) { return r.passed; });
}

std::int64_t PruneReport::failures() const {
  return std::count_if(rows.begin(), rows.end(), [](const PruneCheck& r) { return !r.passed; });
}

PruneReport verify_prune_identity(const GolombParams& params, std::int64_t n_first,
                                  std::int64_t n_last) {
  params.validate();
  const std::int64_t threshold = prune_threshold(params);
  if (n_first <= threshold) {
    throw std::invalid_argument("every n must exceed 3+2s+lambda*j = " + std::to_string(threshold));
  }
  PruneReport report{.params = params};
  if (n_last < n_first) return report;

  const auto w = leaf_weight_sequence(TreeVariant::Knot, params, n_last);
  const Value drop = params.lambda * params.j;
  report.rows.reserve(static_cast<std::size_t>(n_last - n_first + 1));
  for (std::int64_t n = n_first; n <= n_last; ++n) {
    const auto pruned = prune(prefix_view(TreeVariant::Knot, params, n));
    PruneCheck row{.n = n,
                   .d_structural = pruned.d,
                   .d_formula = n - params.s - w(n - params.j),
                   .weight_drop = pruned.weight_drop};
    const bool d_ok = row.d_formula >= 1 && row.d_structural == row.d_formula;
    row.shape_match =
        d_ok && structurally_equal(pruned.result, prefix_view(TreeVariant::Knot, params, row.d_formula));
    row.passed = d_ok && row.shape_match && row.weight_drop == drop &&
                 w(n) - w(row.d_formula) == drop;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace golomb
