#pragma once

// Labeled infinite trees whose weighted leaf counts solve the generalized
// Golomb recursion. Two variants share one skeleton layout:
//
//   Knot: subtree i = supernode -> knot node -> lambda chains of i*j nodes
//   Tail: subtree i = supernode -> lambda chains of i*j nodes, the last chain
//         extended by one tail node
//
// Subtree 0 degenerates to supernode -> one leaf; the initial leaf (weight 1)
// hangs off supernode 0. Supernodes carry s labels, every other node one.
//
// Two computation paths exist: an explicit arena (TreeSkeleton/LabeledTree)
// bounded by kMaxStructuralNodes, and arithmetic label counting used for
// large prefixes. Tests hold them equal.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "golomb/recurrence.hpp"

namespace golomb {

enum class TreeVariant { Knot, Tail };

std::string_view to_string(TreeVariant v);
std::optional<TreeVariant> parse_variant(std::string_view text);

enum class NodeKindTag { InitialLeaf, Supernode, KnotNode, Regular, TailNode };

struct NodeKind {
  NodeKindTag tag = NodeKindTag::Regular;
  std::int64_t subtree = 0;  // owning subtree index i

  friend bool operator==(const NodeKind&, const NodeKind&) = default;
};

using NodeId = std::uint32_t;

struct TreeNode {
  NodeKind kind;
  std::optional<NodeId> parent;
  std::int64_t subtree_index = 0;
  std::optional<std::int64_t> chain_index;     // 1..lambda
  std::optional<std::int64_t> depth_in_chain;  // 1..i*j, or i*j+1 for a tail node
  std::optional<NodeId> first_child;
  std::optional<NodeId> next_sibling;
};

inline constexpr std::int64_t kMaxStructuralNodes = 10'000'000;

class TreeSkeleton {
 public:
  TreeVariant variant() const { return variant_; }
  std::int64_t j() const { return j_; }
  std::int64_t lambda() const { return lambda_; }
  // Index of the last complete subtree present.
  std::int64_t depth() const { return depth_; }

  std::span<const TreeNode> nodes() const { return nodes_; }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  std::vector<NodeId> children(NodeId id) const;
  NodeId supernode(std::int64_t i) const { return supernodes_.at(static_cast<std::size_t>(i)); }
  NodeId initial_leaf() const { return initial_leaf_; }

 private:
  friend TreeSkeleton build_skeleton(TreeVariant, std::int64_t, std::int64_t, std::int64_t);

  NodeId add(TreeNode node);

  TreeVariant variant_ = TreeVariant::Knot;
  std::int64_t j_ = 1;
  std::int64_t lambda_ = 1;
  std::int64_t depth_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<NodeId> supernodes_;
  std::vector<NodeId> last_child_;
  NodeId initial_leaf_ = 0;
};

// Number of arena nodes build_skeleton would allocate.
std::int64_t skeleton_node_count(std::int64_t j, std::int64_t lambda, std::int64_t depth);

// Subtrees 0..depth plus the initial leaf. Throws std::length_error past
// kMaxStructuralNodes and std::invalid_argument on bad parameters.
TreeSkeleton build_skeleton(TreeVariant variant, std::int64_t j, std::int64_t lambda,
                            std::int64_t depth);

struct LabelRange {
  std::int64_t first = 0;  // for an empty range, the next label to be handed out
  std::int64_t count = 0;

  std::int64_t last() const { return first + count - 1; }
  bool contains(std::int64_t label) const { return label >= first && label <= last(); }
};

class LabeledTree {
 public:
  const TreeSkeleton& skeleton() const { return skeleton_; }
  std::int64_t s() const { return s_; }
  std::int64_t total_labels() const { return total_labels_; }
  const LabelRange& labels(NodeId id) const { return labels_.at(id); }
  // Node ids in the order labels were handed out.
  std::span<const NodeId> traversal() const { return traversal_; }
  // Leaves of the infinite tree that the prefix contains, in label order.
  std::vector<NodeId> leaves() const;
  std::int64_t weight(NodeId leaf) const;

 private:
  friend LabeledTree assign_labels(TreeSkeleton skel, std::int64_t s);

  TreeSkeleton skeleton_;
  std::int64_t s_ = 0;
  std::int64_t total_labels_ = 0;
  std::vector<LabelRange> labels_;
  std::vector<NodeId> traversal_;
};

// Pre-order labeling: initial leaf, supernode 0, its leaf; then for each
// later subtree the supernode, the knot node (Knot only) and the chains in
// creation order, each root to leaf.
LabeledTree assign_labels(TreeSkeleton skel, std::int64_t s);

// Smallest depth whose labeled tree holds at least `labels` labels.
std::int64_t depth_for_labels(TreeVariant variant, const GolombParams& params, std::int64_t labels);

// Structural tree covering labels [1, label_limit].
LabeledTree build_labeled_tree(TreeVariant variant, const GolombParams& params,
                               std::int64_t label_limit);

struct LeafRecord {
  std::int64_t label = 0;
  std::int64_t weight = 0;
  std::int64_t ordinal = 0;

  friend bool operator==(const LeafRecord&, const LeafRecord&) = default;
};

// Labels held by subtree i; subtree 0 includes the initial leaf (s+2),
// subtree i >= 1 holds s + lambda*i*j + 1 in both variants.
std::int64_t subtree_label_count(const GolombParams& params, std::int64_t i);

// Arithmetic path: leaves with label <= label_limit.
std::vector<LeafRecord> leaf_records(TreeVariant variant, const GolombParams& params,
                                     std::int64_t label_limit);

// Structural path: same records read off an explicit labeled tree, which
// must hold at least label_limit labels.
std::vector<LeafRecord> leaf_records(const LabeledTree& tree, std::int64_t label_limit);

// w(n) for n in [1, n_max].
SequenceBuffer leaf_weight_sequence(TreeVariant variant, const GolombParams& params,
                                    std::int64_t n_max);

// w(1..3+2s+lambda*j): the labels of subtrees 0 and 1.
InitialConditions initial_conditions(TreeVariant variant, const GolombParams& params);
std::int64_t initial_condition_length(const GolombParams& params);

// Labeled-node counts of one subtree, listed in traversal order. `chains`
// holds only chains with at least one label. `stem` is the knot node (or the
// leaf of subtree 0) and is always false for Tail.
struct SubtreeShape {
  std::int64_t index = 0;
  std::int64_t supernode_labels = 0;
  bool stem = false;
  std::vector<std::int64_t> chains;

  std::int64_t label_count() const;
  friend bool operator==(const SubtreeShape&, const SubtreeShape&) = default;
};

SubtreeShape full_subtree_shape(TreeVariant variant, const GolombParams& params, std::int64_t i);

// Shape of subtree i when its first `labels` labels (initial leaf excluded)
// are present.
SubtreeShape partial_subtree_shape(TreeVariant variant, const GolombParams& params,
                                   std::int64_t i, std::int64_t labels);

// K(n) = K_0, ..., K_{m-1}, K*_m with K*_m the subtree holding label n.
struct PrefixView {
  TreeVariant variant = TreeVariant::Knot;
  GolombParams params;
  std::int64_t n = 1;
  std::int64_t m = 0;
  std::vector<SubtreeShape> subtrees;  // indices 0..m
  bool incomplete = false;

  std::span<const SubtreeShape> complete_subtrees() const {
    return std::span<const SubtreeShape>(subtrees).first(static_cast<std::size_t>(m));
  }
  const SubtreeShape& partial() const { return subtrees.back(); }
  // Chains of K*_m holding their full length, and labels in its last chain.
  std::int64_t whole_chains() const;
  std::int64_t last_chain_labels() const;
};

PrefixView prefix_view(TreeVariant variant, const GolombParams& params, std::int64_t n);

// The same decomposition read off an explicit labeled tree.
PrefixView prefix_view(const LabeledTree& tree, std::int64_t n);

// Total weight of leaves of the infinite tree present in `subtrees`
// (initial leaf included).
std::int64_t leaf_weight(TreeVariant variant, const GolombParams& params,
                         std::span<const SubtreeShape> subtrees);
inline std::int64_t leaf_weight(const PrefixView& view) {
  return leaf_weight(view.variant, view.params, view.subtrees);
}

// Graphviz rendering of every node of the prefix holding a label <= label_limit.
std::string to_dot(const LabeledTree& tree, std::int64_t label_limit);

}  // namespace golomb
