#include "discourse/rst_tree.hpp"

#include "discourse/errors.hpp"

namespace discourse {

std::string_view to_string(Nuclearity n) {
  return n == Nuclearity::nucleus ? "nucleus" : "satellite";
}

Nuclearity parse_nuclearity(std::string_view s) {
  if (s == "nucleus" || s == "Nucleus" || s == "N") return Nuclearity::nucleus;
  if (s == "satellite" || s == "Satellite" || s == "S") return Nuclearity::satellite;
  throw InputError("unknown nuclearity '" + std::string(s) + "'");
}

std::string RstLabel::to_string() const {
  return std::string(discourse::to_string(nuclearity)) + ":" + relation;
}

RstLabel RstLabel::parse(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos || colon + 1 == s.size())
    throw InputError("label '" + std::string(s) + "' is not nuclearity:relation");
  return RstLabel{parse_nuclearity(s.substr(0, colon)), std::string(s.substr(colon + 1))};
}

RstNode RstNode::make_leaf(int edu, std::optional<RstLabel> label) {
  RstNode n;
  n.label = std::move(label);
  n.leaf = edu;
  n.edus = {edu, edu + 1};
  return n;
}

RstNode RstNode::make_internal(std::optional<RstLabel> label, std::vector<RstNode> children,
                               bool synthetic) {
  if (children.empty()) throw StructureError("internal node needs children");
  RstNode n;
  n.label = std::move(label);
  n.edus = {children.front().edus.lo, children.back().edus.hi};
  n.children = std::move(children);
  n.synthetic = synthetic;
  return n;
}

int count_leaves(const RstNode& tree) {
  if (tree.is_leaf()) return 1;
  int n = 0;
  for (const auto& c : tree.children) n += count_leaves(c);
  return n;
}

int count_internal(const RstNode& tree) {
  if (tree.is_leaf()) return 0;
  int n = 1;
  for (const auto& c : tree.children) n += count_internal(c);
  return n;
}

bool is_binary(const RstNode& tree) {
  if (tree.children.size() > 2) return false;
  for (const auto& c : tree.children)
    if (!is_binary(c)) return false;
  return true;
}

namespace {

void validate_node(const RstNode& node, bool is_root, int& next_leaf) {
  if (is_root && node.label) throw StructureError("root carries a label");
  if (!is_root && !node.label)
    throw StructureError("non-root node at " + to_string(node.edus) + " has no label");
  if (node.is_leaf()) {
    if (node.leaf != next_leaf)
      throw StructureError("leaf " + std::to_string(node.leaf) + " out of order; expected " +
                           std::to_string(next_leaf));
    if (node.edus != Span{node.leaf, node.leaf + 1})
      throw StructureError("leaf " + std::to_string(node.leaf) + " has span " + to_string(node.edus));
    ++next_leaf;
    return;
  }
  int expected = node.edus.lo;
  for (const auto& c : node.children) {
    if (c.edus.lo != expected)
      throw StructureError("children of " + to_string(node.edus) + " do not tile it");
    validate_node(c, false, next_leaf);
    expected = c.edus.hi;
  }
  if (expected != node.edus.hi)
    throw StructureError("children of " + to_string(node.edus) + " do not tile it");
  if (node.children.size() == 2 &&
      node.children[0].label->nuclearity == Nuclearity::satellite &&
      node.children[1].label->nuclearity == Nuclearity::satellite)
    throw StructureError("binary node " + to_string(node.edus) + " has two satellites");
}

void render(const RstNode& n, std::string& out) {
  out += '(';
  if (n.label) {
    out += n.label->nuclearity == Nuclearity::nucleus ? "N:" : "S:";
    out += n.label->relation;
  } else {
    out += "root";
  }
  if (n.synthetic) out += '*';
  if (n.is_leaf()) {
    out += ' ';
    out += std::to_string(n.leaf);
  }
  for (const auto& c : n.children) {
    out += ' ';
    render(c, out);
  }
  out += ')';
}

}  // namespace

void validate(const RstNode& tree) {
  int next_leaf = tree.edus.lo;
  validate_node(tree, true, next_leaf);
}

std::string to_bracket(const RstNode& tree) {
  std::string out;
  render(tree, out);
  return out;
}

}  // namespace discourse
