#pragma once

#include <span>
#include <string>
#include <vector>

#include "discourse/document.hpp"
#include "discourse/features.hpp"
#include "discourse/transition.hpp"

namespace discourse {

/// Per-EDU facts the parser features read, computed once per document.
struct EduContext {
  int sentence = 0;
  Span tokens;  // sentence coordinates
  std::vector<std::string> words;  // lowercased
  std::vector<std::string> tags;
  std::string head_word;
  std::string head_pos;
  std::string head_label;  // label of highest_covering_node
  // Head token and label of the parent of highest_covering_node; -1 / "" when
  // that node is the sentence root.
  int attach_head = -1;
  std::string attach_label;
  bool paragraph_start = false;
};

struct ParseContext {
  std::vector<EduContext> edus;

  int size() const noexcept { return static_cast<int>(edus.size()); }
};

/// Sentences must have heads assigned (make_sentence does this).
ParseContext make_parse_context(const Document& doc, std::span<const Edu> edus);

/// Feature names for the configuration `state`.
std::vector<std::string> parse_feature_names(const ParserState& state, const ParseContext& ctx);

/// Binary vector over parse_feature_names; unknown names are dropped.
FeatureVector extract_parse_features(const ParserState& state, const ParseContext& ctx,
                                     const FeatureVocabulary& vocab);

/// Nonterminal symbol of a stack item: `EDU`, `U:<child label>`, or
/// nuclearity code plus the satellite relation (`NS:attribution`).
std::string stack_symbol(const Subtree& item);

}  // namespace discourse
