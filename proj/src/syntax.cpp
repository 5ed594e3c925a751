#include "discourse/syntax.hpp"

#include "discourse/errors.hpp"
#include "discourse/head_rules.hpp"

namespace discourse {

SyntaxTree::SyntaxTree(const Builder& root) {
  int next_token = 0;
  flatten(root, -1, 0, next_token);
}

int SyntaxTree::flatten(const Builder& b, int parent, int depth, int& next_token) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(SyntaxNode{b.label, {}, parent, depth, {next_token, next_token}, -1, b.word});
  if (b.children.empty()) {
    preterminals_.push_back(id);
    ++next_token;
  } else {
    for (const auto& child : b.children) {
      int child_id = flatten(child, id, depth + 1, next_token);
      nodes_[id].children.push_back(child_id);
    }
  }
  nodes_[id].span.hi = next_token;
  return id;
}

int SyntaxTree::preterminal(int token) const {
  if (token < 0 || token >= num_tokens())
    throw InputError("token index " + std::to_string(token) + " outside sentence of " +
                     std::to_string(num_tokens()) + " tokens");
  return preterminals_[token];
}

void SyntaxTree::assign_heads(const HeadRuleTable& rules) {
  // Children follow parents in pre-order, so a reverse sweep is bottom-up.
  for (int id = size() - 1; id >= 0; --id) {
    auto& n = nodes_[id];
    if (n.is_preterminal()) {
      n.head_token = n.span.lo;
    } else {
      n.head_token = nodes_[n.children[rules.head_child(*this, id)]].head_token;
    }
  }
  heads_assigned_ = true;
}

int SyntaxTree::common_ancestor(int i, int j) const {
  int node = preterminal(i);
  preterminal(j);  // range check
  while (!nodes_[node].span.contains(j)) node = nodes_[node].parent;
  return node;
}

int SyntaxTree::right_sibling(int id) const {
  const int parent = nodes_.at(id).parent;
  if (parent < 0) return -1;
  const auto& siblings = nodes_[parent].children;
  for (size_t k = 0; k + 1 < siblings.size(); ++k)
    if (siblings[k] == id) return siblings[k + 1];
  return -1;
}

void SyntaxTree::render(int id, std::string& out) const {
  const auto& n = nodes_[id];
  out += '(';
  out += n.label;
  if (n.is_preterminal()) {
    out += ' ';
    out += n.word;
  } else {
    for (int c : n.children) {
      out += ' ';
      render(c, out);
    }
  }
  out += ')';
}

std::string SyntaxTree::to_string() const {
  std::string out;
  if (!empty()) render(0, out);
  return out;
}

int head_token(const SyntaxTree& tree, int node, const HeadRuleTable& rules) {
  const auto& n = tree.node(node);
  if (n.is_preterminal()) return n.span.lo;
  return head_token(tree, n.children[rules.head_child(tree, node)], rules);
}

}  // namespace discourse
