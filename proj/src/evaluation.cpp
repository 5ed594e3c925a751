#include "discourse/evaluation.hpp"

#include <algorithm>

#include "discourse/errors.hpp"

namespace discourse {

PRF PRF::from_counts(long tp, long predicted, long gold) {
  PRF r;
  r.true_positives = tp;
  r.predicted = predicted;
  r.gold = gold;
  if (predicted == 0 && gold == 0) {
    r.precision = r.recall = r.f1 = 1.0;
    return r;
  }
  r.precision = predicted > 0 ? static_cast<double>(tp) / predicted : 0.0;
  r.recall = gold > 0 ? static_cast<double>(tp) / gold : 0.0;
  r.f1 = r.precision + r.recall > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
  return r;
}

std::string_view to_string(Layer layer) {
  switch (layer) {
    case Layer::span:
      return "span";
    case Layer::nuclearity:
      return "nuclearity";
    case Layer::relation:
      return "relation";
  }
  return "";
}

Layer parse_layer(std::string_view s) {
  if (s == "span") return Layer::span;
  if (s == "nuclearity") return Layer::nuclearity;
  if (s == "relation") return Layer::relation;
  throw InputError("unknown layer '" + std::string(s) + "' (expected span, nuclearity or relation)");
}

PRF segmentation_prf(std::span<const std::vector<SegTag>> gold, std::span<const std::vector<SegTag>> predicted) {
  if (gold.size() != predicted.size())
    throw InputError("segmentation: " + std::to_string(gold.size()) + " gold sentences vs " +
                     std::to_string(predicted.size()) + " predicted");
  long tp = 0, np = 0, ng = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != predicted[s].size())
      throw InputError("segmentation: sentence " + std::to_string(s) + " has " + std::to_string(gold[s].size()) +
                       " gold tags vs " + std::to_string(predicted[s].size()) + " predicted");
    for (size_t i = 1; i < gold[s].size(); ++i) {
      const bool g = gold[s][i] == SegTag::begin;
      const bool p = predicted[s][i] == SegTag::begin;
      ng += g;
      np += p;
      tp += g && p;
    }
  }
  return PRF::from_counts(tp, np, ng);
}

namespace {

void collect(const RstNode& n, Layer layer, std::vector<LabeledSpan>& out) {
  if (n.label) {
    std::string label;
    if (layer == Layer::nuclearity)
      label = std::string(to_string(n.label->nuclearity));
    else if (layer == Layer::relation)
      label = n.label->to_string();
    out.push_back({n.edus, std::move(label)});
  }
  for (const auto& c : n.children) collect(c, layer, out);
}

}  // namespace

std::vector<LabeledSpan> collect_spans(const RstNode& tree, Layer layer) {
  std::vector<LabeledSpan> out;
  for (const auto& c : tree.children) collect(c, layer, out);
  std::sort(out.begin(), out.end());
  return out;
}

PRF parseval_prf(std::span<const RstNode> gold, std::span<const RstNode> predicted, Layer layer,
                 std::span<const std::string> ids) {
  if (gold.size() != predicted.size())
    throw InputError("parseval: " + std::to_string(gold.size()) + " gold trees vs " +
                     std::to_string(predicted.size()) + " predicted");
  long tp = 0, np = 0, ng = 0;
  for (size_t d = 0; d < gold.size(); ++d) {
    if (gold[d].edus != predicted[d].edus) {
      const std::string id = d < ids.size() ? ids[d] : "#" + std::to_string(d);
      throw DataError(id, "gold covers EDUs " + to_string(gold[d].edus) + " but the prediction covers " +
                              to_string(predicted[d].edus));
    }
    const auto g = collect_spans(gold[d], layer);
    const auto p = collect_spans(predicted[d], layer);
    std::vector<LabeledSpan> common;
    std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(common));
    tp += static_cast<long>(common.size());
    np += static_cast<long>(p.size());
    ng += static_cast<long>(g.size());
  }
  return PRF::from_counts(tp, np, ng);
}

}  // namespace discourse
