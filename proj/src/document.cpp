#include "discourse/document.hpp"

#include <algorithm>
#include <cctype>

#include "discourse/errors.hpp"
#include "discourse/head_rules.hpp"

namespace discourse {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

int Document::num_tokens() const noexcept {
  return sentences.empty() ? 0 : sentences.back().offset + sentences.back().size();
}

int Document::sentence_of(int token) const {
  auto it = std::upper_bound(sentences.begin(), sentences.end(), token,
                             [](int t, const Sentence& s) { return t < s.offset; });
  if (it == sentences.begin() || token >= num_tokens())
    throw InputError("token " + std::to_string(token) + " outside document '" + id + "'");
  return static_cast<int>(std::distance(sentences.begin(), it)) - 1;
}

Sentence make_sentence(std::vector<RawToken> tokens, SyntaxTree parse, bool paragraph_start,
                       int offset, const HeadRuleTable& rules, const WarningSink& warn) {
  if (tokens.empty()) throw InputError("sentence has no tokens");
  if (parse.num_tokens() != static_cast<int>(tokens.size()))
    throw InputError("parse yield has " + std::to_string(parse.num_tokens()) +
                     " tokens but the sentence has " + std::to_string(tokens.size()));
  Sentence s;
  s.paragraph_start = paragraph_start;
  s.offset = offset;
  s.tokens.reserve(tokens.size());
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    auto& raw = tokens[i];
    if (raw.form.empty()) throw InputError("empty token form at position " + std::to_string(i));
    const auto& tree_pos = parse.node(parse.preterminal(i)).label;
    if (raw.pos != tree_pos) {
      if (warn && !raw.pos.empty())
        warn("token " + std::to_string(i) + " '" + raw.form + "': POS " + raw.pos +
             " disagrees with parse tag " + tree_pos + "; using " + tree_pos);
      raw.pos = tree_pos;
    }
    s.tokens.push_back(Token{std::move(raw.form), std::move(raw.pos), i, offset + i});
  }
  parse.assign_heads(rules);
  s.parse = std::move(parse);
  return s;
}

Document make_document(std::string id, std::vector<Sentence> sentences) {
  Document doc;
  doc.id = std::move(id);
  int offset = 0;
  for (auto& s : sentences) {
    s.offset = offset;
    for (auto& t : s.tokens) t.index_in_document = offset + t.index_in_sentence;
    offset += s.size();
  }
  if (!sentences.empty()) sentences.front().paragraph_start = true;
  doc.sentences = std::move(sentences);
  return doc;
}

std::vector<Edu> make_edus(const Document& doc, std::span<const Span> spans) {
  std::vector<Edu> edus;
  edus.reserve(spans.size());
  int expected = 0;
  for (size_t k = 0; k < spans.size(); ++k) {
    const Span s = spans[k];
    if (s.lo != expected || s.empty())
      throw DataError(doc.id, "EDU " + std::to_string(k) + " " + to_string(s) +
                                  " does not continue the tiling at token " + std::to_string(expected));
    if (s.hi > doc.num_tokens())
      throw DataError(doc.id, "EDU " + std::to_string(k) + " runs past the last token");
    const int sentence = doc.sentence_of(s.lo);
    if (!doc.sentences[sentence].document_span().contains(s))
      throw DataError(doc.id, "EDU " + std::to_string(k) + " " + to_string(s) +
                                  " crosses a sentence boundary");
    edus.push_back(Edu{static_cast<int>(k), s, sentence});
    expected = s.hi;
  }
  if (expected != doc.num_tokens())
    throw DataError(doc.id, "EDUs cover " + std::to_string(expected) + " of " +
                                std::to_string(doc.num_tokens()) + " tokens");
  // A new sentence always opens a new EDU.
  for (const auto& s : doc.sentences) {
    bool starts = std::any_of(edus.begin(), edus.end(),
                              [&](const Edu& e) { return e.tokens.lo == s.offset; });
    if (!starts) throw DataError(doc.id, "sentence at token " + std::to_string(s.offset) +
                                             " does not start an EDU");
  }
  return edus;
}

std::vector<Edu> sentence_edus(const Document& doc) {
  std::vector<Span> spans;
  for (const auto& s : doc.sentences) spans.push_back(s.document_span());
  return make_edus(doc, spans);
}

int highest_covering_node(const Edu& edu, const Sentence& sentence) {
  const Span local{edu.tokens.lo - sentence.offset, edu.tokens.hi - sentence.offset};
  const auto& tree = sentence.parse;
  int best = -1;
  for (int id = 0; id < tree.size(); ++id) {
    const auto& n = tree.node(id);
    if (!local.contains(n.span)) continue;
    if (n.parent >= 0 && local.contains(tree.node(n.parent).span)) continue;  // not maximal
    if (best < 0) {
      best = id;
      continue;
    }
    const auto& b = tree.node(best);
    if (n.depth < b.depth || (n.depth == b.depth && n.span.lo < b.span.lo)) best = id;
  }
  if (best < 0) throw InputError("EDU " + to_string(edu.tokens) + " lies outside its sentence");
  return best;
}

int edu_head_token(const Edu& edu, const Sentence& sentence) {
  return sentence.parse.node(highest_covering_node(edu, sentence)).head_token;
}

}  // namespace discourse
