#include "synthetic.hpp"

#include "discourse/head_rules.hpp"
#include "discourse/treebank_io.hpp"

namespace discourse::support {
namespace {

const std::vector<std::string> kDet = {"the", "a", "every", "some"};
const std::vector<std::string> kNoun = {"cat", "dog", "farmer", "teacher", "company", "river", "child", "market"};
const std::vector<std::string> kVerb = {"saw", "liked", "sold", "built", "found", "moved", "watched", "paid"};
const std::vector<std::string> kPlural = {"apples", "houses", "boats", "letters", "shares", "trees", "songs"};

const std::string& pick(Rng& rng, const std::vector<std::string>& v) {
  return v[uniform_int(rng, 0, static_cast<int>(v.size()) - 1)];
}

struct Piece {
  std::vector<RawToken> tokens;
  std::string ptb;  // bracketed constituent(s)
};

Piece clause(Rng& rng) {
  const auto& d = pick(rng, kDet);
  const auto& n = pick(rng, kNoun);
  const auto& v = pick(rng, kVerb);
  const auto& p = pick(rng, kPlural);
  Piece c;
  c.tokens = {{d, "DT"}, {n, "NN"}, {v, "VBD"}, {p, "NNS"}};
  c.ptb = "(S (NP (DT " + d + ") (NN " + n + ")) (VP (VBD " + v + ") (NP (NNS " + p + "))))";
  return c;
}

enum class Kind { explanation, concession, attribution, joint, single, list };

int edus_of(Kind k) {
  switch (k) {
    case Kind::single:
      return 1;
    case Kind::list:
      return 3;
    default:
      return 2;
  }
}

// One generated sentence: tokens, parse, EDU lengths and the sentence-level
// tree over local EDU indices 0..k-1 (root unlabeled).
struct SentenceDraft {
  std::vector<RawToken> tokens;
  std::string ptb;
  std::vector<int> edu_lengths;
  std::vector<RstLabel> leaf_labels;  // empty for a single EDU
};

const RawToken kComma{",", ","};
const RawToken kPeriod{".", "."};

void append(std::vector<RawToken>& out, const std::vector<RawToken>& in) { out.insert(out.end(), in.begin(), in.end()); }

SentenceDraft draft(Rng& rng, Kind kind) {
  SentenceDraft s;
  const RstLabel n_span{Nuclearity::nucleus, "span"};
  switch (kind) {
    case Kind::explanation: {
      auto a = clause(rng), b = clause(rng);
      append(s.tokens, a.tokens);
      s.tokens.push_back(kComma);
      s.tokens.push_back({"because", "IN"});
      append(s.tokens, b.tokens);
      s.tokens.push_back(kPeriod);
      s.ptb = "(ROOT (S " + a.ptb + " (, ,) (SBAR (IN because) " + b.ptb + ") (. .)))";
      s.edu_lengths = {5, 6};
      s.leaf_labels = {n_span, {Nuclearity::satellite, "Explanation-argumentative"}};
      break;
    }
    case Kind::concession: {
      auto a = clause(rng), b = clause(rng);
      s.tokens.push_back({"although", "IN"});
      append(s.tokens, a.tokens);
      s.tokens.push_back(kComma);
      append(s.tokens, b.tokens);
      s.tokens.push_back(kPeriod);
      s.ptb = "(ROOT (S (SBAR (IN although) " + a.ptb + ") (, ,) " + b.ptb + " (. .)))";
      s.edu_lengths = {6, 5};
      s.leaf_labels = {{Nuclearity::satellite, "Concession"}, n_span};
      break;
    }
    case Kind::attribution: {
      auto a = clause(rng);
      append(s.tokens, a.tokens);
      s.tokens.push_back(kComma);
      s.tokens.push_back({"he", "PRP"});
      s.tokens.push_back({"said", "VBD"});
      s.tokens.push_back(kPeriod);
      s.ptb = "(ROOT (S " + a.ptb + " (, ,) (NP (PRP he)) (VP (VBD said)) (. .)))";
      s.edu_lengths = {5, 3};
      s.leaf_labels = {n_span, {Nuclearity::satellite, "attribution"}};
      break;
    }
    case Kind::joint: {
      auto a = clause(rng), b = clause(rng);
      append(s.tokens, a.tokens);
      s.tokens.push_back(kComma);
      s.tokens.push_back({"and", "CC"});
      append(s.tokens, b.tokens);
      s.tokens.push_back(kPeriod);
      s.ptb = "(ROOT (S " + a.ptb + " (, ,) (CC and) " + b.ptb + " (. .)))";
      s.edu_lengths = {5, 6};
      s.leaf_labels = {{Nuclearity::nucleus, "List"}, {Nuclearity::nucleus, "List"}};
      break;
    }
    case Kind::single: {
      auto a = clause(rng);
      append(s.tokens, a.tokens);
      s.tokens.push_back(kPeriod);
      // Reuse the clause's NP and VP directly under S.
      s.ptb = "(ROOT " + a.ptb.substr(0, a.ptb.size() - 1) + " (. .)))";
      s.edu_lengths = {5};
      break;
    }
    case Kind::list: {
      auto a = clause(rng), b = clause(rng), c = clause(rng);
      append(s.tokens, a.tokens);
      s.tokens.push_back(kComma);
      append(s.tokens, b.tokens);
      s.tokens.push_back(kComma);
      s.tokens.push_back({"and", "CC"});
      append(s.tokens, c.tokens);
      s.tokens.push_back(kPeriod);
      s.ptb = "(ROOT (S " + a.ptb + " (, ,) " + b.ptb + " (, ,) (CC and) " + c.ptb + " (. .)))";
      s.edu_lengths = {5, 5, 6};
      s.leaf_labels.assign(3, {Nuclearity::nucleus, "List"});
      break;
    }
  }
  return s;
}

Kind random_kind(Rng& rng, int max_edus) {
  static const std::vector<Kind> all = {Kind::explanation, Kind::concession, Kind::attribution,
                                        Kind::joint,       Kind::single,     Kind::list};
  std::vector<Kind> ok;
  for (Kind k : all)
    if (edus_of(k) <= max_edus) ok.push_back(k);
  return ok[uniform_int(rng, 0, static_cast<int>(ok.size()) - 1)];
}

class Builder {
 public:
  void add_sentence(const SentenceDraft& d, bool paragraph_start) {
    const int offset = token_count_;
    sentences_.push_back(make_sentence(d.tokens, read_ptb(d.ptb), paragraph_start, offset, HeadRuleTable::standard()));
    int at = offset;
    std::vector<RstNode> leaves;
    for (size_t i = 0; i < d.edu_lengths.size(); ++i) {
      spans_.push_back({at, at + d.edu_lengths[i]});
      RstNode leaf = RstNode::make_leaf(static_cast<int>(spans_.size()) - 1);
      std::string text;
      for (int t = at; t < at + d.edu_lengths[i]; ++t) text += (t > at ? " " : "") + d.tokens[t - offset].form;
      leaf.text = std::move(text);
      if (!d.leaf_labels.empty()) leaf.label = d.leaf_labels[i];
      leaves.push_back(std::move(leaf));
      at += d.edu_lengths[i];
    }
    token_count_ = at;
    sentence_trees_.push_back(leaves.size() == 1 ? std::move(leaves.front())
                                                 : RstNode::make_internal(std::nullopt, std::move(leaves)));
  }

  // Groups the sentences added since the last call into one paragraph tree.
  void close_paragraph() {
    std::vector<RstNode> parts(std::make_move_iterator(sentence_trees_.begin()),
                               std::make_move_iterator(sentence_trees_.end()));
    sentence_trees_.clear();
    if (parts.size() == 1) {
      paragraphs_.push_back(std::move(parts.front()));
      return;
    }
    parts[0].label = RstLabel{Nuclearity::nucleus, "span"};
    for (size_t i = 1; i < parts.size(); ++i) parts[i].label = RstLabel{Nuclearity::satellite, "elaboration-additional"};
    paragraphs_.push_back(RstNode::make_internal(std::nullopt, std::move(parts)));
  }

  SyntheticDocument finish(std::string id) {
    SyntheticDocument out;
    if (paragraphs_.size() == 1) {
      out.tree = std::move(paragraphs_.front());
    } else {
      for (auto& p : paragraphs_) p.label = RstLabel{Nuclearity::nucleus, "TextualOrganization"};
      out.tree = RstNode::make_internal(std::nullopt, std::move(paragraphs_));
    }
    out.document = make_document(std::move(id), std::move(sentences_));
    out.document.edus = make_edus(out.document, spans_);
    out.document.rst = write_dis(out.tree);
    return out;
  }

 private:
  std::vector<Sentence> sentences_;
  std::vector<Span> spans_;
  std::vector<RstNode> sentence_trees_;
  std::vector<RstNode> paragraphs_;
  int token_count_ = 0;
};

}  // namespace

SyntheticDocument synthetic_document(Rng& rng, std::string id) {
  Builder b;
  const int paragraphs = uniform_int(rng, 1, 3);
  for (int p = 0; p < paragraphs; ++p) {
    const int sentences = uniform_int(rng, 1, 3);
    for (int s = 0; s < sentences; ++s) b.add_sentence(draft(rng, random_kind(rng, 3)), s == 0);
    b.close_paragraph();
  }
  return b.finish(std::move(id));
}

SyntheticDocument synthetic_document_with_edus(Rng& rng, std::string id, int num_edus) {
  Builder b;
  int remaining = num_edus;
  while (remaining > 0) {
    const int sentences = uniform_int(rng, 1, 3);
    for (int s = 0; s < sentences && remaining > 0; ++s) {
      const Kind k = random_kind(rng, remaining);
      b.add_sentence(draft(rng, k), s == 0);
      remaining -= edus_of(k);
    }
    b.close_paragraph();
  }
  return b.finish(std::move(id));
}

ParserExample parser_example(const SyntheticDocument& doc) {
  return {&doc.document, *doc.document.edus, binarize(collapse_labels(doc.tree))};
}

std::vector<ParserExample> parser_examples(const std::vector<SyntheticDocument>& docs) {
  std::vector<ParserExample> out;
  for (const auto& d : docs) out.push_back(parser_example(d));
  return out;
}

std::vector<SyntheticDocument> synthetic_corpus(Rng& rng, int count, const std::string& prefix) {
  std::vector<SyntheticDocument> out;
  for (int i = 0; i < count; ++i) out.push_back(synthetic_document(rng, prefix + std::to_string(i)));
  return out;
}

}  // namespace discourse::support
