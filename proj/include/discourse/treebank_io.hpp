#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "discourse/rst_tree.hpp"
#include "discourse/syntax.hpp"

namespace discourse {

/// Reads one RST-DT `.dis` tree. Leaf numbers are converted to 0-based EDU
/// indices; labels are kept verbatim (nuclearity, rel2par). Throws ParseError
/// with the position of the problem.
RstNode read_dis(std::string_view text);

/// Writes `tree` in `.dis` layout. `read_dis(write_dis(t)) == t` for every
/// tree without synthetic nodes (the format cannot express them).
std::string write_dis(const RstNode& tree);

/// Reads one PTB bracketed parse. Function tags are stripped from
/// nonterminals, `-NONE-` elements and nodes left empty are dropped, and an
/// unlabeled outer wrapper with one child is removed.
SyntaxTree read_ptb(std::string_view text);

/// Fine-grained relation -> coarse class table.
class RelationMap {
 public:
  static constexpr int kNumClasses = 18;

  /// Parses `fine<TAB>coarse` lines (`#` comments). Throws ParseError when
  /// the values do not form exactly 18 classes.
  static RelationMap parse(std::string_view text);
  static RelationMap load(const std::filesystem::path& path);
  static const RelationMap& standard();

  /// Sorted coarse class names.
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  /// Lookup of an already-normalized key.
  const std::string* find(const std::string& key) const;

 private:
  std::map<std::string, std::string> table_;
  std::vector<std::string> classes_;
};

/// Maps a fine label (any case, optional -e/-n/-s suffix) to its coarse class.
/// "span" and "root" pass through. Throws MappingError on unknown labels.
std::string collapse_relation(std::string_view fine, const RelationMap& map = RelationMap::standard());

/// Applies collapse_relation to every label in the tree.
RstNode collapse_labels(RstNode tree, const RelationMap& map = RelationMap::standard());

/// Rewrites every node with more than two children into a chain of binary
/// nodes marked `synthetic`. The chain branches right unless that would group
/// satellites without a nucleus, in which case the trailing satellite is split
/// off on the right instead. Synthetic nodes are labeled nucleus:<relation of
/// the first nucleus they cover>. Throws StructureError for nodes without a
/// nucleus among two or more children.
RstNode binarize(const RstNode& tree);

/// Splices every synthetic internal node into its parent.
RstNode debinarize(const RstNode& tree);

}  // namespace discourse
