#pragma once

#include <string>
#include <vector>

#include "discourse/span.hpp"

namespace discourse {

class HeadRuleTable;

/// Constituency-tree node. Preterminals have no children and carry the word;
/// their label is the POS tag.
struct SyntaxNode {
  std::string label;
  std::vector<int> children;
  int parent = -1;
  int depth = 0;
  Span span;  // sentence token coordinates
  int head_token = -1;
  std::string word;

  bool is_preterminal() const noexcept { return children.empty(); }
};

/// Immutable flat constituency tree; node 0 is the root, nodes are stored in
/// pre-order so children always follow their parent.
class SyntaxTree {
 public:
  /// Raw recursive form used while building a tree.
  struct Builder {
    std::string label;
    std::string word;  // non-empty only for preterminals
    std::vector<Builder> children;
  };

  SyntaxTree() = default;
  /// Flattens `root`, computes spans and depths. Heads are left unassigned.
  explicit SyntaxTree(const Builder& root);

  bool empty() const noexcept { return nodes_.empty(); }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  int num_tokens() const noexcept { return static_cast<int>(preterminals_.size()); }
  const SyntaxNode& node(int id) const { return nodes_.at(id); }
  const SyntaxNode& root() const { return nodes_.at(0); }
  /// Node id of the preterminal over token `i`.
  int preterminal(int token) const;
  bool heads_assigned() const noexcept { return heads_assigned_; }

  /// One bottom-up pass computing `head_token` for every node.
  void assign_heads(const HeadRuleTable& rules);

  /// Lowest node whose span contains tokens `i` and `j`.
  int common_ancestor(int i, int j) const;

  /// Right sibling of `id` under its parent, or -1.
  int right_sibling(int id) const;

  /// PTB bracket rendering.
  std::string to_string() const;

 private:
  int flatten(const Builder& b, int parent, int depth, int& next_token);
  void render(int id, std::string& out) const;

  std::vector<SyntaxNode> nodes_;
  std::vector<int> preterminals_;
  bool heads_assigned_ = false;
};

/// Head token of `node` computed directly from `rules`, without memoization.
int head_token(const SyntaxTree& tree, int node, const HeadRuleTable& rules);

}  // namespace discourse
