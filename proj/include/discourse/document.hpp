#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discourse/span.hpp"
#include "discourse/syntax.hpp"

namespace discourse {

class HeadRuleTable;

struct Token {
  std::string form;
  std::string pos;
  int index_in_sentence = 0;
  int index_in_document = 0;
};

struct Sentence {
  std::vector<Token> tokens;
  SyntaxTree parse;
  bool paragraph_start = false;
  /// Document index of the first token.
  int offset = 0;

  int size() const noexcept { return static_cast<int>(tokens.size()); }
  Span document_span() const noexcept { return {offset, offset + size()}; }
};

struct Edu {
  int index = 0;
  Span tokens;  // document token coordinates
  int sentence = 0;

  friend bool operator==(const Edu&, const Edu&) = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::optional<std::vector<Edu>> edus;
  std::optional<std::string> rst;

  int num_tokens() const noexcept;
  /// Sentence containing document token `i`.
  int sentence_of(int token) const;
};

/// Form/POS pair as it arrives from the interchange format.
struct RawToken {
  std::string form;
  std::string pos;
};

using WarningSink = std::function<void(std::string_view)>;

/// Builds a sentence from tokens and a parse. The parse yield must match the
/// token count; preterminal POS wins over token POS on conflict (reported via
/// `warn`). Heads are assigned with `rules`.
Sentence make_sentence(std::vector<RawToken> tokens, SyntaxTree parse, bool paragraph_start,
                       int offset, const HeadRuleTable& rules, const WarningSink& warn = {});

/// Appends sentences in order, fixing document offsets and forcing the first
/// sentence to open a paragraph.
Document make_document(std::string id, std::vector<Sentence> sentences);

/// Validates that `spans` tile the document without crossing sentences.
/// Throws DataError otherwise.
std::vector<Edu> make_edus(const Document& doc, std::span<const Span> spans);

/// One EDU per sentence.
std::vector<Edu> sentence_edus(const Document& doc);

/// Node id of the highest constituent lying inside the EDU; among several
/// maximal candidates the shallowest wins, then the leftmost.
int highest_covering_node(const Edu& edu, const Sentence& sentence);

/// Head token (sentence coordinates) of highest_covering_node.
int edu_head_token(const Edu& edu, const Sentence& sentence);

std::string lowercase(std::string_view s);

}  // namespace discourse
