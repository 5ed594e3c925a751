#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discourse/span.hpp"

namespace discourse {

enum class Nuclearity { nucleus, satellite };

std::string_view to_string(Nuclearity n);
Nuclearity parse_nuclearity(std::string_view s);

/// (nuclearity, relation) label attached to every non-root node.
struct RstLabel {
  Nuclearity nuclearity = Nuclearity::nucleus;
  std::string relation;

  /// `nucleus:span`, `satellite:attribution`, ...
  std::string to_string() const;
  static RstLabel parse(std::string_view s);

  friend bool operator==(const RstLabel&, const RstLabel&) = default;
};

/// Discourse tree node. The root is the only node without a label. Leaves
/// carry an EDU index; `synthetic` marks nodes introduced by binarization.
struct RstNode {
  std::optional<RstLabel> label;
  std::vector<RstNode> children;
  int leaf = -1;
  Span edus;
  bool synthetic = false;
  std::string text;

  bool is_leaf() const noexcept { return children.empty(); }
  bool is_root() const noexcept { return !label.has_value(); }

  static RstNode make_leaf(int edu, std::optional<RstLabel> label = std::nullopt);
  /// Internal node; edus is the union of the children's intervals.
  static RstNode make_internal(std::optional<RstLabel> label, std::vector<RstNode> children,
                               bool synthetic = false);

  friend bool operator==(const RstNode&, const RstNode&) = default;
};

int count_leaves(const RstNode& tree);
int count_internal(const RstNode& tree);
bool is_binary(const RstNode& tree);

/// Checks span contiguity, leaf numbering, label placement and, for binary
/// nodes, the at-least-one-nucleus rule. Throws StructureError.
void validate(const RstNode& tree);

/// Compact bracket rendering for diagnostics and tests, e.g.
/// `(root (N:span 0) (S:attribution 1))`.
std::string to_bracket(const RstNode& tree);

}  // namespace discourse
