#include <gtest/gtest.h>

#include "discourse/errors.hpp"
#include "discourse/evaluation.hpp"
#include "random_trees.hpp"

using namespace discourse;
using discourse::support::Rng;

namespace {

RstLabel N(const char* r) { return {Nuclearity::nucleus, r}; }
RstLabel S(const char* r) { return {Nuclearity::satellite, r}; }

std::vector<SegTag> tags_with_begins(int n, std::initializer_list<int> begins) {
  std::vector<SegTag> t(n, SegTag::inside);
  t[0] = SegTag::begin;
  for (int b : begins) t[b] = SegTag::begin;
  return t;
}

// (0 (1 2)) vs ((0 1) 2)
RstNode right_branching() {
  auto inner = RstNode::make_internal(S("elaboration"), {RstNode::make_leaf(1, N("joint")), RstNode::make_leaf(2, N("joint"))});
  return RstNode::make_internal(std::nullopt, {RstNode::make_leaf(0, N("span")), std::move(inner)});
}

RstNode left_branching() {
  auto inner = RstNode::make_internal(N("span"), {RstNode::make_leaf(0, N("span")), RstNode::make_leaf(1, S("elaboration"))});
  return RstNode::make_internal(std::nullopt, {std::move(inner), RstNode::make_leaf(2, S("elaboration"))});
}

}  // namespace

TEST(SegmentationPrf, Perfect) {
  std::vector<std::vector<SegTag>> g{tags_with_begins(10, {3, 7}), tags_with_begins(4, {})};
  const auto r = segmentation_prf(g, g);
  EXPECT_EQ(r.f1, 1.0);
  EXPECT_EQ(r.gold, 2);
}

TEST(SegmentationPrf, HandCount) {
  std::vector<std::vector<SegTag>> g{tags_with_begins(10, {3, 7})};
  std::vector<std::vector<SegTag>> p{tags_with_begins(10, {3, 5})};
  const auto r = segmentation_prf(g, p);
  EXPECT_EQ(r.precision, 0.5);
  EXPECT_EQ(r.recall, 0.5);
  EXPECT_EQ(r.f1, 0.5);
  const auto swapped = segmentation_prf(p, g);
  EXPECT_EQ(swapped.precision, r.recall);
  EXPECT_EQ(swapped.recall, r.precision);
}

TEST(SegmentationPrf, LengthOneSentenceContributesNothing) {
  std::vector<std::vector<SegTag>> g{{SegTag::begin}};
  const auto r = segmentation_prf(g, g);
  EXPECT_EQ(r.gold, 0);
  EXPECT_EQ(r.predicted, 0);
  EXPECT_EQ(r.f1, 1.0);
}

TEST(SegmentationPrf, LengthMismatch) {
  std::vector<std::vector<SegTag>> g{tags_with_begins(3, {})};
  std::vector<std::vector<SegTag>> p{tags_with_begins(4, {})};
  EXPECT_THROW(segmentation_prf(g, p), InputError);
}

TEST(CollectSpans, TwoLeaves) {
  auto t = RstNode::make_internal(std::nullopt, {RstNode::make_leaf(0, N("span")), RstNode::make_leaf(1, S("attribution"))});
  const auto spans = collect_spans(t, Layer::nuclearity);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].edus, (Span{0, 1}));
  EXPECT_EQ(spans[0].label, "nucleus");
  EXPECT_EQ(spans[1].label, "satellite");
  EXPECT_EQ(collect_spans(t, Layer::relation)[1].label, "satellite:attribution");
  EXPECT_EQ(collect_spans(t, Layer::span)[1].label, "");
}

TEST(CollectSpans, ThreeLeafRightBranching) {
  const auto spans = collect_spans(right_branching(), Layer::span);
  std::vector<Span> got;
  for (const auto& s : spans) got.push_back(s.edus);
  EXPECT_EQ(got, (std::vector<Span>{{0, 1}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(Parseval, HandBuiltThreeEdu) {
  const std::vector<RstNode> g{right_branching()}, p{left_branching()};
  EXPECT_EQ(parseval_prf(g, p, Layer::span).f1, 0.75);
  EXPECT_EQ(parseval_prf(g, g, Layer::relation).f1, 1.0);
}

TEST(Parseval, TwoEduSpanAlwaysPerfect) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const std::vector<RstNode> g{support::random_binary_tree(rng, 2)}, p{support::random_binary_tree(rng, 2)};
    EXPECT_EQ(parseval_prf(g, p, Layer::span).f1, 1.0);
  }
}

TEST(Parseval, MismatchNamesDocument) {
  const std::vector<RstNode> g{right_branching()};
  const std::vector<RstNode> p{RstNode::make_leaf(0)};
  const std::vector<std::string> ids{"wsj_0600"};
  try {
    parseval_prf(g, p, Layer::span, ids);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.document_id(), "wsj_0600");
  }
}

TEST(Parseval, LayerMonotonicity) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const int n = support::uniform_int(rng, 1, 20);
    const std::vector<RstNode> g{support::random_binary_tree(rng, n)}, p{support::random_binary_tree(rng, n)};
    const double s = parseval_prf(g, p, Layer::span).f1;
    const double nu = parseval_prf(g, p, Layer::nuclearity).f1;
    const double r = parseval_prf(g, p, Layer::relation).f1;
    EXPECT_GE(s, nu);
    EXPECT_GE(nu, r);
    EXPECT_EQ(parseval_prf(g, g, Layer::relation).f1, 1.0);
  }
}

TEST(Layers, Parse) {
  EXPECT_EQ(parse_layer("nuclearity"), Layer::nuclearity);
  EXPECT_THROW(parse_layer("full"), InputError);
}
