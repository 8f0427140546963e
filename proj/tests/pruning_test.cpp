#include <gtest/gtest.h>

#include "golomb/pruning.hpp"
#include "oracles.hpp"

namespace golomb {
namespace {

const GolombParams kFig{2, 4, 3};

TEST(Prune, KnotExample52To31) {
  auto r = prune(prefix_view(TreeVariant::Knot, kFig, 52));
  EXPECT_EQ(r.d, 31);
  EXPECT_EQ(r.result.n, 31);
  EXPECT_EQ(r.partial_case, PruneCase::ManyChains);
  EXPECT_TRUE(structurally_equal(r.result, prefix_view(TreeVariant::Knot, kFig, 31)));
}

TEST(Prune, LabelsRemovedIsSPlusWeight) {
  auto w = oracle::leaf_weights(false, 2, 4, 3, 60);
  ASSERT_EQ(w[50 - 1], 17);
  auto r = prune(prefix_view(TreeVariant::Knot, kFig, 52));
  EXPECT_EQ(r.labels_removed, 21);
  EXPECT_EQ(r.labels_removed, 4 + w[50 - 1]);
  EXPECT_EQ(r.weight_drop, 6);
}

TEST(Prune, SmallestPrunableN) {
  // K*_2 holds one supernode label (< j): untouched.
  auto r = prune(prefix_view(TreeVariant::Knot, kFig, 18));
  EXPECT_EQ(r.d, 7);
  EXPECT_EQ(r.partial_case, PruneCase::Untouched);
  EXPECT_TRUE(structurally_equal(r.result, prefix_view(TreeVariant::Knot, kFig, 7)));
}

TEST(Prune, FewChainsCaseRemovesLargestLabels) {
  // n = 35 + 4: K*_3 holds 4 supernode labels, 0 chains -> case 2.
  auto r = prune(prefix_view(TreeVariant::Knot, kFig, 38));
  EXPECT_EQ(r.partial_case, PruneCase::FewChains);
  EXPECT_EQ(r.result.partial().supernode_labels, 2);
  EXPECT_TRUE(structurally_equal(r.result, prefix_view(TreeVariant::Knot, kFig, r.d)));
}

TEST(Prune, Preconditions) {
  EXPECT_THROW(prune(prefix_view(TreeVariant::Knot, kFig, 17)), std::invalid_argument);
  EXPECT_THROW(prune(prefix_view(TreeVariant::Tail, kFig, 60)), std::invalid_argument);
  EXPECT_EQ(prune_threshold({3, 2, 2}), 13);
}

TEST(StructurallyEqual, Basics) {
  auto a = prefix_view(TreeVariant::Knot, kFig, 40);
  EXPECT_TRUE(structurally_equal(a, a));
  EXPECT_FALSE(structurally_equal(a, prefix_view(TreeVariant::Knot, kFig, 41)));
  EXPECT_THROW(structurally_equal(a, prefix_view(TreeVariant::Tail, kFig, 40)), std::invalid_argument);
  EXPECT_THROW(structurally_equal(a, prefix_view(TreeVariant::Knot, {2, 4, 2}, 40)), std::invalid_argument);
}

TEST(VerifyPruneIdentity, KnotExampleParameters) {
  auto report = verify_prune_identity(kFig, 18, 500);
  EXPECT_EQ(report.rows.size(), 483u);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.failures(), 0);
  for (const auto& row : report.rows) {
    if (row.n == 52) {
      EXPECT_EQ(row.d_structural, 31);
      EXPECT_EQ(row.d_formula, 31);
    }
  }
}

TEST(VerifyPruneIdentity, GolombTree) {
  auto report = verify_prune_identity({1, 0, 1}, 5, 500);
  EXPECT_TRUE(report.all_passed());
  for (const auto& row : report.rows) EXPECT_EQ(row.weight_drop, 1);
}

TEST(VerifyPruneIdentity, RejectsBoundary) {
  EXPECT_THROW(verify_prune_identity({3, 2, 2}, 13, 20), std::invalid_argument);
  EXPECT_NO_THROW(verify_prune_identity({3, 2, 2}, 14, 20));
}

TEST(VerifyPruneIdentity, Grid) {
  for (std::int64_t j = 1; j <= 3; ++j) {
    for (std::int64_t s = 0; s <= 3; ++s) {
      for (std::int64_t lambda = 1; lambda <= 3; ++lambda) {
        const GolombParams p{j, s, lambda};
        auto report = verify_prune_identity(p, prune_threshold(p) + 1, 2000);
        ASSERT_TRUE(report.all_passed()) << to_string(p) << " failures=" << report.failures();
      }
    }
  }
}

// Pruned views compared against K(d) read off an explicit arena.
TEST(Prune, ResultMatchesArenaPrefix) {
  for (std::int64_t j = 1; j <= 3; ++j) {
    for (std::int64_t s = 0; s <= 3; ++s) {
      for (std::int64_t lambda = 1; lambda <= 3; ++lambda) {
        const GolombParams p{j, s, lambda};
        auto tree = build_labeled_tree(TreeVariant::Knot, p, 300);
        for (std::int64_t n = prune_threshold(p) + 1; n <= 300; ++n) {
          auto r = prune(prefix_view(tree, n));
          ASSERT_TRUE(structurally_equal(r.result, prefix_view(tree, r.d))) << to_string(p) << " n=" << n;
        }
      }
    }
  }
}

TEST(Prune, RepeatedPruningTerminates) {
  for (std::int64_t j = 1; j <= 3; ++j) {
    for (std::int64_t s = 0; s <= 3; ++s) {
      for (std::int64_t lambda = 1; lambda <= 3; ++lambda) {
        const GolombParams p{j, s, lambda};
        for (std::int64_t start : {prune_threshold(p) + 1, std::int64_t{777}, std::int64_t{2000}}) {
          auto view = prefix_view(TreeVariant::Knot, p, start);
          std::int64_t steps = 0;
          while (view.n > prune_threshold(p)) {
            auto r = prune(view);
            ASSERT_LT(r.d, view.n);
            ASSERT_EQ(leaf_weight(r.result), leaf_weight(view) - lambda * j);
            view = r.result;
            ++steps;
          }
          EXPECT_LE(steps, start);
        }
      }
    }
  }
}

}  // namespace
}  // namespace golomb
