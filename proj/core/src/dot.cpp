#include <sstream>

#include "golomb/treemodel.hpp"

namespace golomb {

namespace {

std::string range_text(const LabelRange& r) {
  if (r.count == 0) return "";
  if (r.count == 1) return std::to_string(r.first);
  return std::to_string(r.first) + "–" + std::to_string(r.last());
}

}  // namespace

std::string to_dot(const LabeledTree& tree, std::int64_t label_limit) {
  const auto& sk = tree.skeleton();
  std::ostringstream os;
  os << "digraph " << (sk.variant() == TreeVariant::Knot ? "K" : "Kprime") << " {\n";
  os << "  // j=" << sk.j() << " s=" << tree.s() << " lambda=" << sk.lambda()
     << " labels<=" << label_limit << "\n";
  os << "  node [shape=ellipse];\n";

  auto included = [&](NodeId id) { return tree.labels(id).first <= label_limit; };

  for (NodeId id : tree.traversal()) {
    if (!included(id)) continue;
    const auto& node = sk.node(id);
    LabelRange r = tree.labels(id);
    if (r.last() > label_limit) r.count = label_limit - r.first + 1;

    std::string text = range_text(r);
    std::string attrs;
    switch (node.kind.tag) {
      case NodeKindTag::Supernode:
        attrs = "shape=box, ";
        break;
      case NodeKindTag::KnotNode:
        text += "\\nknot " + std::to_string(node.kind.subtree);
        break;
      case NodeKindTag::TailNode:
        text += "\\ntail " + std::to_string(node.kind.subtree);
        break;
      case NodeKindTag::InitialLeaf:
        text += "\\ninitial";
        break;
      case NodeKindTag::Regular:
        break;
    }
    os << "  n" << id << " [" << attrs << "label=\"" << text << "\"];\n";
  }
  for (NodeId id : tree.traversal()) {
    if (!included(id)) continue;
    if (auto p = sk.node(id).parent) os << "  n" << *p << " -> n" << id << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace golomb
