#include "golomb/treemodel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace golomb {

std::string_view to_string(TreeVariant v) {
  return v == TreeVariant::Knot ? "knot" : "tail";
}

std::optional<TreeVariant> parse_variant(std::string_view text) {
  if (text == "knot" || text == "Knot" || text == "K") return TreeVariant::Knot;
  if (text == "tail" || text == "Tail" || text == "K'") return TreeVariant::Tail;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Skeleton

NodeId TreeSkeleton::add(TreeNode node) {
  const auto id = static_cast<NodeId>(nodes_.size());
  if (node.parent) {
    const NodeId p = *node.parent;
    if (auto last = last_child_[p]; last != p) {
      nodes_[last].next_sibling = id;
    } else {
      nodes_[p].first_child = id;
    }
    last_child_[p] = id;
  }
  nodes_.push_back(node);
  last_child_.push_back(id);  // self marks "no children yet"
  return id;
}

std::vector<NodeId> TreeSkeleton::children(NodeId id) const {
  std::vector<NodeId> out;
  for (auto c = node(id).first_child; c; c = node(*c).next_sibling) out.push_back(*c);
  return out;
}

std::int64_t skeleton_node_count(std::int64_t j, std::int64_t lambda, std::int64_t depth) {
  // initial leaf + subtree 0 (two nodes) + sum_{i=1..depth} (lambda*i*j + 2)
  __int128 total = 3;
  for (std::int64_t i = 1; i <= depth; ++i) {
    total += static_cast<__int128>(lambda) * i * j + 2;
    if (total > INT64_MAX) return INT64_MAX;
  }
  return static_cast<std::int64_t>(total);
}

TreeSkeleton build_skeleton(TreeVariant variant, std::int64_t j, std::int64_t lambda,
                            std::int64_t depth) {
  if (j < 1 || lambda < 1) throw std::invalid_argument("j and lambda must be >= 1");
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  const std::int64_t count = skeleton_node_count(j, lambda, depth);
  if (count > kMaxStructuralNodes) {
    throw std::length_error("structural tree would need " + std::to_string(count) +
                            " nodes (limit " + std::to_string(kMaxStructuralNodes) + ")");
  }

  TreeSkeleton sk;
  sk.variant_ = variant;
  sk.j_ = j;
  sk.lambda_ = lambda;
  sk.depth_ = depth;
  sk.nodes_.reserve(static_cast<std::size_t>(count));
  sk.last_child_.reserve(static_cast<std::size_t>(count));

  // Subtree 0: supernode with one leaf below it, and the initial leaf.
  const NodeId root = sk.add({.kind = {NodeKindTag::Supernode, 0}});
  sk.supernodes_.push_back(root);
  sk.initial_leaf_ = sk.add({.kind = {NodeKindTag::InitialLeaf, 0}, .parent = root});
  if (variant == TreeVariant::Knot) {
    sk.add({.kind = {NodeKindTag::Regular, 0}, .parent = root});
  } else {
    sk.add({.kind = {NodeKindTag::Regular, 0},
            .parent = root,
            .chain_index = 1,
            .depth_in_chain = 1});
  }

  for (std::int64_t i = 1; i <= depth; ++i) {
    const NodeId super =
        sk.add({.kind = {NodeKindTag::Supernode, i}, .parent = sk.supernodes_.back(), .subtree_index = i});
    sk.supernodes_.push_back(super);

    NodeId hang = super;
    if (variant == TreeVariant::Knot) {
      hang = sk.add({.kind = {NodeKindTag::KnotNode, i}, .parent = super, .subtree_index = i});
    }
    const std::int64_t len = i * j;
    for (std::int64_t c = 1; c <= lambda; ++c) {
      const bool tailed = variant == TreeVariant::Tail && c == lambda;
      const std::int64_t chain_len = tailed ? len + 1 : len;
      NodeId prev = hang;
      for (std::int64_t d = 1; d <= chain_len; ++d) {
        const bool is_tail = tailed && d == chain_len;
        prev = sk.add({.kind = {is_tail ? NodeKindTag::TailNode : NodeKindTag::Regular, i},
                       .parent = prev,
                       .subtree_index = i,
                       .chain_index = c,
                       .depth_in_chain = d});
      }
    }
  }
  return sk;
}

// ---------------------------------------------------------------------------
// Labeling

LabeledTree assign_labels(TreeSkeleton skel, std::int64_t s) {
  if (s < 0) throw std::invalid_argument("s must be >= 0");
  LabeledTree t;
  t.s_ = s;
  t.labels_.assign(skel.nodes().size(), LabelRange{});
  t.traversal_.reserve(skel.nodes().size());

  auto skip = [&](NodeId id) {
    auto tag = skel.node(id).kind.tag;
    return tag == NodeKindTag::Supernode || tag == NodeKindTag::InitialLeaf;
  };

  t.traversal_.push_back(skel.initial_leaf());
  std::vector<NodeId> stack;
  for (std::int64_t i = 0; i <= skel.depth(); ++i) {
    stack.push_back(skel.supernode(i));
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      t.traversal_.push_back(id);
      auto kids = skel.children(id);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        if (!skip(*it)) stack.push_back(*it);
      }
    }
  }

  std::int64_t next = 1;
  for (NodeId id : t.traversal_) {
    const std::int64_t width = skel.node(id).kind.tag == NodeKindTag::Supernode ? s : 1;
    t.labels_[id] = LabelRange{next, width};
    next += width;
  }
  t.total_labels_ = next - 1;
  t.skeleton_ = std::move(skel);
  return t;
}

std::vector<NodeId> LabeledTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId id : traversal_) {
    if (!skeleton_.node(id).first_child) out.push_back(id);
  }
  return out;
}

std::int64_t LabeledTree::weight(NodeId leaf) const {
  return skeleton_.node(leaf).kind.tag == NodeKindTag::InitialLeaf ? 1 : skeleton_.j();
}

// ---------------------------------------------------------------------------
// Label arithmetic

std::int64_t subtree_label_count(const GolombParams& p, std::int64_t i) {
  if (i == 0) return checked::add_or_throw(p.s, 2, "subtree label count");
  Value chains = checked::mul_or_throw(checked::mul_or_throw(p.lambda, i, "lambda*i"), p.j, "lambda*i*j");
  return checked::add_or_throw(checked::add_or_throw(chains, p.s, "subtree label count"), 1,
                               "subtree label count");
}

std::int64_t depth_for_labels(TreeVariant, const GolombParams& params, std::int64_t labels) {
  params.validate();
  std::int64_t total = 0;
  for (std::int64_t i = 0;; ++i) {
    total = checked::add_or_throw(total, subtree_label_count(params, i), "label total");
    if (total >= labels) return i;
  }
}

LabeledTree build_labeled_tree(TreeVariant variant, const GolombParams& params,
                               std::int64_t label_limit) {
  const std::int64_t depth = depth_for_labels(variant, params, label_limit);
  return assign_labels(build_skeleton(variant, params.j, params.lambda, depth), params.s);
}

std::vector<LeafRecord> leaf_records(TreeVariant variant, const GolombParams& params,
                                     std::int64_t label_limit) {
  params.validate();
  if (label_limit < 1) throw std::invalid_argument("label_limit must be >= 1");
  std::vector<LeafRecord> out;
  const std::int64_t j = params.j;
  const std::int64_t s = params.s;
  std::int64_t ordinal = 0;
  auto emit = [&](std::int64_t label, std::int64_t weight) {
    if (label > label_limit) return false;
    out.push_back({label, weight, ordinal++});
    return true;
  };

  emit(1, 1);
  if (!emit(s + 2, j)) return out;

  // `base` = labels used by subtrees 0..i-1.
  std::int64_t base = s + 2;
  for (std::int64_t i = 1; base < label_limit; ++i) {
    const std::int64_t len = i * j;
    for (std::int64_t c = 1; c <= params.lambda; ++c) {
      std::int64_t label = 0;
      if (variant == TreeVariant::Knot) {
        label = base + s + 1 + c * len;
      } else {
        label = base + s + c * len + (c == params.lambda ? 1 : 0);
      }
      if (!emit(label, j)) return out;
    }
    base += subtree_label_count(params, i);
  }
  return out;
}

std::vector<LeafRecord> leaf_records(const LabeledTree& tree, std::int64_t label_limit) {
  if (label_limit < 1) throw std::invalid_argument("label_limit must be >= 1");
  if (tree.total_labels() < label_limit) {
    throw std::invalid_argument("labeled tree holds fewer than label_limit labels");
  }
  std::vector<LeafRecord> out;
  for (NodeId id : tree.leaves()) {
    const auto& r = tree.labels(id);
    if (r.first > label_limit) break;
    out.push_back({r.first, tree.weight(id), static_cast<std::int64_t>(out.size())});
  }
  return out;
}

SequenceBuffer leaf_weight_sequence(TreeVariant variant, const GolombParams& params,
                                    std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const auto leaves = leaf_records(variant, params, n_max);
  std::vector<Value> w(static_cast<std::size_t>(n_max));
  Value total = 0;
  std::size_t next = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    while (next < leaves.size() && leaves[next].label == n) total += leaves[next++].weight;
    w[static_cast<std::size_t>(n - 1)] = total;
  }
  return SequenceBuffer(std::move(w), params, Source::TreeWeight);
}

std::int64_t initial_condition_length(const GolombParams& params) {
  return subtree_label_count(params, 0) + subtree_label_count(params, 1);
}

InitialConditions initial_conditions(TreeVariant variant, const GolombParams& params) {
  auto w = leaf_weight_sequence(variant, params, initial_condition_length(params));
  return InitialConditions(std::vector<Value>(w.values().begin(), w.values().end()));
}

// ---------------------------------------------------------------------------
// Prefix decomposition

std::int64_t SubtreeShape::label_count() const {
  return supernode_labels + (stem ? 1 : 0) + std::accumulate(chains.begin(), chains.end(), std::int64_t{0});
}

SubtreeShape full_subtree_shape(TreeVariant variant, const GolombParams& p, std::int64_t i) {
  SubtreeShape sh{.index = i, .supernode_labels = p.s};
  if (variant == TreeVariant::Knot) {
    sh.stem = true;
    if (i > 0) sh.chains.assign(static_cast<std::size_t>(p.lambda), i * p.j);
  } else if (i == 0) {
    sh.chains = {1};
  } else {
    sh.chains.assign(static_cast<std::size_t>(p.lambda), i * p.j);
    sh.chains.back() += 1;
  }
  return sh;
}

SubtreeShape partial_subtree_shape(TreeVariant variant, const GolombParams& p, std::int64_t i,
                                   std::int64_t labels) {
  const SubtreeShape full = full_subtree_shape(variant, p, i);
  SubtreeShape sh{.index = i};
  sh.supernode_labels = std::min(labels, full.supernode_labels);
  std::int64_t rest = labels - sh.supernode_labels;
  if (full.stem && rest > 0) {
    sh.stem = true;
    --rest;
  }
  for (std::int64_t len : full.chains) {
    if (rest <= 0) break;
    const std::int64_t take = std::min(rest, len);
    sh.chains.push_back(take);
    rest -= take;
  }
  if (rest > 0) throw std::invalid_argument("more labels than the subtree holds");
  return sh;
}

std::int64_t PrefixView::whole_chains() const {
  const auto full = full_subtree_shape(variant, params, m);
  std::int64_t c = 0;
  for (std::size_t k = 0; k < partial().chains.size(); ++k) c += partial().chains[k] == full.chains[k];
  return c;
}

std::int64_t PrefixView::last_chain_labels() const {
  return partial().chains.empty() ? 0 : partial().chains.back();
}

PrefixView prefix_view(TreeVariant variant, const GolombParams& params, std::int64_t n) {
  params.validate();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  PrefixView v{.variant = variant, .params = params, .n = n};
  std::int64_t remaining = n - 1;  // the initial leaf holds label 1
  for (std::int64_t i = 0;; ++i) {
    const std::int64_t cap = subtree_label_count(params, i) - (i == 0 ? 1 : 0);
    if (remaining <= cap) {
      v.subtrees.push_back(partial_subtree_shape(variant, params, i, remaining));
      v.m = i;
      v.incomplete = remaining < cap;
      return v;
    }
    v.subtrees.push_back(full_subtree_shape(variant, params, i));
    remaining -= cap;
  }
}

PrefixView prefix_view(const LabeledTree& tree, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (tree.total_labels() < n) throw std::invalid_argument("labeled tree too shallow for n");
  const auto& sk = tree.skeleton();
  PrefixView v{.variant = sk.variant(),
               .params = {sk.j(), tree.s(), sk.lambda()},
               .n = n};

  std::vector<SubtreeShape> shapes;
  std::vector<std::vector<std::int64_t>> chains;
  for (NodeId id : tree.traversal()) {
    const auto& node = sk.node(id);
    const auto& r = tree.labels(id);
    if (r.contains(n)) v.m = node.subtree_index;
    const std::int64_t present = std::clamp<std::int64_t>(n - r.first + 1, 0, r.count);
    if (node.kind.tag == NodeKindTag::InitialLeaf) continue;
    const auto i = static_cast<std::size_t>(node.subtree_index);
    if (shapes.size() <= i) {
      shapes.resize(i + 1);
      chains.resize(i + 1);
      shapes[i].index = node.subtree_index;
    }
    if (node.kind.tag == NodeKindTag::Supernode) {
      shapes[i].supernode_labels = present;
    } else if (node.chain_index) {
      auto& cs = chains[i];
      if (cs.size() < static_cast<std::size_t>(*node.chain_index)) cs.resize(*node.chain_index, 0);
      cs[*node.chain_index - 1] += present;
    } else {
      shapes[i].stem = present > 0;
    }
  }
  shapes.resize(static_cast<std::size_t>(v.m + 1));
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::int64_t c : chains[i]) {
      if (c > 0) shapes[i].chains.push_back(c);
    }
  }
  v.subtrees = std::move(shapes);
  v.incomplete = v.partial() != full_subtree_shape(v.variant, v.params, v.m);
  return v;
}

std::int64_t leaf_weight(TreeVariant variant, const GolombParams& params,
                         std::span<const SubtreeShape> subtrees) {
  std::int64_t w = 1;  // initial leaf
  for (const auto& sh : subtrees) {
    const auto full = full_subtree_shape(variant, params, sh.index);
    if (full.chains.empty() && sh.stem) w += params.j;
    for (std::size_t c = 0; c < sh.chains.size() && c < full.chains.size(); ++c) {
      if (sh.chains[c] == full.chains[c]) w += params.j;
    }
  }
  return w;
}

}  // namespace golomb
