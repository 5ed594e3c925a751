#include "discourse/parse_features.hpp"

#include <array>
#include <cstdlib>
#include <optional>

#include "discourse/errors.hpp"

namespace discourse {

ParseContext make_parse_context(const Document& doc, std::span<const Edu> edus) {
  ParseContext ctx;
  ctx.edus.reserve(edus.size());
  for (const auto& edu : edus) {
    const Sentence& sent = doc.sentences.at(edu.sentence);
    if (!sent.parse.heads_assigned()) throw InputError("sentence " + std::to_string(edu.sentence) + " has no heads");
    const SyntaxTree& tree = sent.parse;
    EduContext e;
    e.sentence = edu.sentence;
    e.tokens = {edu.tokens.lo - sent.offset, edu.tokens.hi - sent.offset};
    for (int t = e.tokens.lo; t < e.tokens.hi; ++t) {
      e.words.push_back(lowercase(sent.tokens[t].form));
      e.tags.push_back(sent.tokens[t].pos);
    }
    const int top = highest_covering_node(edu, sent);
    const int head = tree.node(top).head_token;
    e.head_word = lowercase(sent.tokens[head].form);
    e.head_pos = sent.tokens[head].pos;
    e.head_label = tree.node(top).label;
    if (const int parent = tree.node(top).parent; parent >= 0) {
      e.attach_head = tree.node(parent).head_token;
      e.attach_label = tree.node(parent).label;
    }
    e.paragraph_start = sent.paragraph_start && e.tokens.lo == 0;
    ctx.edus.push_back(std::move(e));
  }
  return ctx;
}

std::string stack_symbol(const Subtree& item) {
  if (item.is_leaf()) return "EDU";
  if (item.is_unary()) return "U:" + item.left->label->to_string();
  const RstLabel& l = *item.left->label;
  const RstLabel& r = *item.right->label;
  if (l.nuclearity == Nuclearity::nucleus && r.nuclearity == Nuclearity::nucleus) return "NN:" + l.relation;
  if (l.nuclearity == Nuclearity::nucleus) return "NS:" + r.relation;
  return "SN:" + l.relation;
}

namespace {

std::string child_symbol(const SubtreePtr& child) {
  if (!child) return "none";
  return child->label->to_string() + (child->synthetic ? "*" : "");
}

struct Position {
  std::string name;
  SubtreePtr item;  // null for Q0
  int head_edu = -1;
  int first_edu = -1;
  bool present = false;
};

}  // namespace

std::vector<std::string> parse_feature_names(const ParserState& state, const ParseContext& ctx) {
  std::vector<std::string> f;
  f.reserve(128);
  f.emplace_back("bias");
  f.push_back("pa=" + (state.prev_action() ? state.prev_action()->to_string() : std::string("none")));

  std::array<Position, 4> pos;
  for (int k = 0; k < 3; ++k) {
    pos[k].name = "s" + std::to_string(k);
    pos[k].item = state.stack_item(k);
    if (pos[k].item) {
      pos[k].present = true;
      pos[k].head_edu = pos[k].item->head_edu;
      pos[k].first_edu = pos[k].item->edus.lo;
    }
  }
  pos[3].name = "q0";
  if (!state.queue_empty()) {
    pos[3].present = true;
    pos[3].head_edu = pos[3].first_edu = state.queue_front();
  }

  std::array<std::string, 3> sym;
  for (int k = 0; k < 3; ++k) {
    sym[k] = pos[k].present ? stack_symbol(*pos[k].item) : "none";
    f.push_back(pos[k].name + "=" + sym[k]);
  }
  f.push_back("s0s1=" + sym[0] + "|" + sym[1]);
  f.push_back("s1s2=" + sym[1] + "|" + sym[2]);
  f.push_back("s0s2=" + sym[0] + "|" + sym[2]);
  f.push_back("s0s1s2=" + sym[0] + "|" + sym[1] + "|" + sym[2]);

  for (int k = 0; k < 3; ++k) {
    const auto& p = pos[k];
    if (!p.present) {
      f.push_back(p.name + "c=none");
      continue;
    }
    f.push_back(p.name + "cl=" + child_symbol(p.item->left));
    f.push_back(p.name + "cr=" + child_symbol(p.item->right));
  }

  for (int k : {0, 1, 3}) {
    const auto& p = pos[k];
    if (!p.present) {
      f.push_back(p.name + "w=none");
      f.push_back(p.name + "p=none");
      continue;
    }
    const EduContext& e = ctx.edus.at(p.head_edu);
    for (const auto& w : e.words) f.push_back(p.name + "w=" + w);
    for (const auto& t : e.tags) f.push_back(p.name + "p=" + t);
  }

  for (const auto& p : pos) {
    if (!p.present) {
      f.push_back(p.name + "h=none");
      f.push_back(p.name + "para=none");
      continue;
    }
    const EduContext& e = ctx.edus.at(p.head_edu);
    f.push_back(p.name + "hw=" + e.head_word);
    f.push_back(p.name + "hp=" + e.head_pos);
    f.push_back(p.name + "hn=" + e.head_label);
    f.push_back(p.name + "para=" + (ctx.edus.at(p.first_edu).paragraph_start ? "1" : "0"));
  }

  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      const std::string pair = pos[a].name + pos[b].name;
      if (!pos[a].present || !pos[b].present) {
        f.push_back("pair:" + pair + "=none");
        continue;
      }
      const EduContext& ea = ctx.edus.at(pos[a].head_edu);
      const EduContext& eb = ctx.edus.at(pos[b].head_edu);
      const int dist = std::abs(pos[a].head_edu - pos[b].head_edu);
      for (int n = 1; n <= 4; ++n)
        if (dist > n) f.push_back("dist>" + std::to_string(n) + ":" + pair);
      const bool same = ea.sentence == eb.sentence;
      f.push_back("same:" + pair + (same ? "=1" : "=0"));
      if (!same || pos[a].head_edu == pos[b].head_edu) continue;
      if (eb.attach_head >= 0 && ea.tokens.contains(eb.attach_head))
        f.push_back("dom:" + pair + "=ab|" + eb.attach_label);
      else if (ea.attach_head >= 0 && eb.tokens.contains(ea.attach_head))
        f.push_back("dom:" + pair + "=ba|" + ea.attach_label);
      else
        f.push_back("dom:" + pair + "=none");
    }
  }
  return f;
}

FeatureVector extract_parse_features(const ParserState& state, const ParseContext& ctx,
                                     const FeatureVocabulary& vocab) {
  const auto names = parse_feature_names(state, ctx);
  return lookup_binary_vector(names, vocab);
}

}  // namespace discourse
