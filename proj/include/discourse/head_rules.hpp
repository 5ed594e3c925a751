#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace discourse {

class SyntaxTree;

/// How a head rule scans a node's children.
///
/// `left`/`right` are category-first: for each label in the priority list, scan
/// the children from that side. `leftdis`/`rightdis` are child-first: scan the
/// children from that side and take the first one whose label is in the list.
enum class HeadDirection { left, right, leftdis, rightdis };

struct HeadRule {
  HeadDirection direction = HeadDirection::left;
  std::vector<std::string> priorities;
};

/// Head-percolation table keyed by nonterminal.
///
/// A label may carry several rules; they are tried in order and the first match
/// wins. When none match, the first child from the side of the first rule is
/// chosen. Labels without an entry use the default rule.
///
/// Text format, one rule per line, `#` starts a comment:
///
///     LABEL <TAB> left|right|leftdis|rightdis [<TAB> CHILD ...]
///     *default* <TAB> left
class HeadRuleTable {
 public:
  HeadRuleTable() = default;

  static HeadRuleTable parse(std::string_view text);
  static HeadRuleTable load(const std::filesystem::path& path);
  /// The shipped Collins-style table (data/head_rules.txt).
  static const HeadRuleTable& standard();

  /// Index (into `children`) of the head child of internal node `node`.
  int head_child(const SyntaxTree& tree, int node) const;

  const std::vector<HeadRule>* rules_for(const std::string& label) const;
  HeadDirection default_direction() const noexcept { return default_direction_; }
  bool contains(const std::string& label) const { return rules_.count(label) != 0; }

 private:
  std::unordered_map<std::string, std::vector<HeadRule>> rules_;
  HeadDirection default_direction_ = HeadDirection::left;
};

}  // namespace discourse
