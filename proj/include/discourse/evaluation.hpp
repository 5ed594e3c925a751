#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discourse/rst_tree.hpp"
#include "discourse/segmenter.hpp"

namespace discourse {

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long true_positives = 0;
  long predicted = 0;
  long gold = 0;

  /// Nothing predicted and nothing to find counts as perfect agreement.
  static PRF from_counts(long tp, long predicted, long gold);
};

enum class Layer { span, nuclearity, relation };

std::string_view to_string(Layer layer);
Layer parse_layer(std::string_view s);

struct LabeledSpan {
  Span edus;
  std::string label;  // empty at the span layer

  friend auto operator<=>(const LabeledSpan&, const LabeledSpan&) = default;
};

/// B-EDU precision/recall over per-sentence tag sequences, ignoring the first
/// tag of every sentence; counts are pooled over the corpus.
PRF segmentation_prf(std::span<const std::vector<SegTag>> gold, std::span<const std::vector<SegTag>> predicted);

/// One span per node except the root, leaves included, sorted.
std::vector<LabeledSpan> collect_spans(const RstNode& tree, Layer layer);

/// Pooled span matching over parallel tree lists (multiset intersection).
/// `ids`, when given, names documents in errors.
PRF parseval_prf(std::span<const RstNode> gold, std::span<const RstNode> predicted, Layer layer,
                 std::span<const std::string> ids = {});

}  // namespace discourse
