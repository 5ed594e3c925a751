#include <gtest/gtest.h>

#include <random>

#include "discourse/document.hpp"
#include "discourse/errors.hpp"
#include "discourse/head_rules.hpp"
#include "discourse/treebank_io.hpp"

using namespace discourse;

namespace {

Sentence sentence_from(const std::string& ptb, bool para = true, int offset = 0) {
  SyntaxTree t = read_ptb(ptb);
  std::vector<RawToken> toks;
  for (int i = 0; i < t.num_tokens(); ++i) {
    const auto& n = t.node(t.preterminal(i));
    toks.push_back({n.word, n.label});
  }
  return make_sentence(std::move(toks), std::move(t), para, offset, HeadRuleTable::standard());
}

int token_of(const SyntaxTree& t, const std::string& word) {
  for (int i = 0; i < t.num_tokens(); ++i)
    if (t.node(t.preterminal(i)).word == word) return i;
  return -1;
}

}  // namespace

TEST(HeadRules, PreterminalIsItsOwnHead) {
  SyntaxTree t = read_ptb("(VBD said)");
  EXPECT_EQ(head_token(t, 0, HeadRuleTable::standard()), 0);
}

TEST(HeadRules, VerbHeadsVp) {
  SyntaxTree t = read_ptb("(VP (VBD said) (SBAR (IN that) (S (NP (PRP it)) (VP (VBD rained)))))");
  EXPECT_EQ(head_token(t, 0, HeadRuleTable::standard()), 0);
  SyntaxTree s = read_ptb("(S (NP (DT the) (NN man)) (VP (VBD said) (NP (NN nothing))))");
  EXPECT_EQ(head_token(s, 0, HeadRuleTable::standard()), token_of(s, "said"));
  EXPECT_EQ(head_token(s, 1, HeadRuleTable::standard()), token_of(s, "man"));
}

TEST(HeadRules, UnknownLabelUsesLeftmostChild) {
  SyntaxTree t = read_ptb("(XYZ (NN a) (VBD b))");
  EXPECT_EQ(head_token(t, 0, HeadRuleTable::standard()), 0);
  auto table = HeadRuleTable::parse("*default*\tright\n");
  EXPECT_EQ(head_token(t, 0, table), 1);
}

TEST(HeadRules, ParseErrors) {
  EXPECT_THROW(HeadRuleTable::parse("NP\tupward\tNN\n"), ParseError);
}

TEST(HeadRules, MemoizedMatchesDirectAndIsAChoiceFunction) {
  SyntaxTree t = read_ptb(
      "(ROOT (S (NP (DT The) (JJ old) (NN man)) (VP (VBD said) (SBAR (IN that) (S (NP (PRP he)) (VP (MD would) (VP "
      "(VB go) (PRT (RP up))))))) (. .)))");
  const auto& rules = HeadRuleTable::standard();
  t.assign_heads(rules);
  for (int id = 0; id < t.size(); ++id) {
    const auto& n = t.node(id);
    EXPECT_EQ(n.head_token, head_token(t, id, rules));
    EXPECT_TRUE(n.span.contains(n.head_token));
    if (n.is_preterminal()) continue;
    int matches = 0;
    for (int c : n.children) matches += t.node(c).head_token == n.head_token;
    EXPECT_EQ(matches, 1);
  }
}

TEST(Syntax, CommonAncestorMatchesBruteForce) {
  SyntaxTree t = read_ptb(
      "(S (NP (DT the) (NN dog)) (VP (VBD picked) (PRT (RP up)) (NP (DT a) (NN stick))) (. .))");
  for (int i = 0; i < t.num_tokens(); ++i)
    for (int j = 0; j < t.num_tokens(); ++j) {
      if (i == j) continue;
      int best = -1;
      for (int id = 0; id < t.size(); ++id) {
        const auto& n = t.node(id);
        if (n.span.contains(i) && n.span.contains(j) && (best < 0 || n.span.size() < t.node(best).span.size()))
          best = id;
      }
      EXPECT_EQ(t.common_ancestor(i, j), best);
      EXPECT_EQ(t.common_ancestor(i, j), t.common_ancestor(j, i));
    }
  EXPECT_EQ(t.node(t.common_ancestor(0, 1)).label, "NP");
  EXPECT_EQ(t.common_ancestor(0, t.num_tokens() - 1), 0);
  EXPECT_EQ(t.node(t.common_ancestor(2, 3)).label, "VP");
  EXPECT_THROW(t.common_ancestor(0, 99), InputError);
}

TEST(Syntax, SpansTileChildren) {
  SyntaxTree t = read_ptb("(S (NP (DT the) (NN dog)) (VP (VBD ran)) (. .))");
  for (int id = 0; id < t.size(); ++id) {
    const auto& n = t.node(id);
    EXPECT_LT(n.span.lo, n.span.hi);
    if (n.is_preterminal()) continue;
    int at = n.span.lo;
    for (int c : n.children) {
      EXPECT_EQ(t.node(c).span.lo, at);
      at = t.node(c).span.hi;
    }
    EXPECT_EQ(at, n.span.hi);
  }
  EXPECT_EQ(read_ptb(t.to_string()).to_string(), t.to_string());
}

TEST(Document, PosConflictWarnsAndTreeWins) {
  SyntaxTree t = read_ptb("(S (NP (PRP He)) (VP (VBD said)))");
  std::vector<std::string> warnings;
  Sentence s = make_sentence({{"He", "PRP"}, {"said", "VBN"}}, std::move(t), true, 0, HeadRuleTable::standard(),
                             [&](std::string_view w) { warnings.emplace_back(w); });
  EXPECT_EQ(s.tokens[1].pos, "VBD");
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Document, YieldMismatchRejected) {
  EXPECT_THROW(make_sentence({{"He", "PRP"}}, read_ptb("(S (NP (PRP He)) (VP (VBD said)))"), true, 0,
                             HeadRuleTable::standard()),
               InputError);
}

TEST(Document, EduTilingValidated) {
  std::vector<Sentence> ss;
  ss.push_back(sentence_from("(S (NP (PRP He)) (VP (VBD said)) (. .))", false));
  ss.push_back(sentence_from("(S (NP (PRP It)) (VP (VBD rained)) (. .))", false));
  Document doc = make_document("d1", std::move(ss));
  EXPECT_TRUE(doc.sentences[0].paragraph_start);
  EXPECT_EQ(doc.sentences[1].offset, 3);
  EXPECT_EQ(doc.sentences[1].tokens[0].index_in_document, 3);

  const std::vector<Span> good{{0, 1}, {1, 3}, {3, 6}};
  auto edus = make_edus(doc, good);
  EXPECT_EQ(edus[2].sentence, 1);
  const std::vector<Span> crossing{{0, 4}, {4, 6}};
  EXPECT_THROW(make_edus(doc, crossing), DataError);
  const std::vector<Span> gap{{0, 1}, {2, 6}};
  EXPECT_THROW(make_edus(doc, gap), DataError);
  const std::vector<Span> short_cover{{0, 3}};
  EXPECT_THROW(make_edus(doc, short_cover), DataError);
  EXPECT_EQ(sentence_edus(doc).size(), 2u);
}

TEST(Document, HighestCoveringNode) {
  std::vector<Sentence> ss;
  ss.push_back(sentence_from("(S (NP (DT the) (NN man)) (, ,) (NP (PRP he)) (VP (VBD said) (NP (NN nothing))))"));
  Document doc = make_document("d", std::move(ss));
  const Sentence& s = doc.sentences[0];
  const SyntaxTree& t = s.parse;

  Edu whole{0, {0, 6}, 0};
  EXPECT_EQ(highest_covering_node(whole, s), 0);
  EXPECT_EQ(edu_head_token(whole, s), t.root().head_token);

  // "the man ," : two maximal in-span nodes at equal depth, leftmost wins.
  Edu first{0, {0, 3}, 0};
  EXPECT_EQ(t.node(highest_covering_node(first, s)).label, "NP");
  EXPECT_EQ(edu_head_token(first, s), 1);

  // "he said nothing": NP and VP are maximal; NP is leftmost.
  Edu second{1, {3, 6}, 0};
  EXPECT_EQ(t.node(highest_covering_node(second, s)).span, (Span{3, 4}));

  Edu single{0, {5, 6}, 0};
  EXPECT_EQ(t.node(highest_covering_node(single, s)).label, "NP");
  EXPECT_EQ(edu_head_token(single, s), 5);
}
