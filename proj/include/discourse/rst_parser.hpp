#pragma once

#include <span>
#include <string>
#include <vector>

#include "discourse/document.hpp"
#include "discourse/maxent.hpp"
#include "discourse/parse_features.hpp"
#include "discourse/rst_tree.hpp"
#include "discourse/transition.hpp"

namespace discourse {

/// One training document: EDUs aligned with the leaves of a binarized,
/// collapsed gold tree.
struct ParserExample {
  const Document* document = nullptr;
  std::vector<Edu> edus;
  RstNode gold;
};

/// (features, oracle action) pairs for every example. Classes are the
/// serialized actions seen, sorted. Throws DataError naming the document.
struct ParserInstances {
  std::vector<std::string> classes;
  FeatureVocabulary vocab;
  std::vector<LabeledInstance> instances;
};
ParserInstances parser_instances(std::span<const ParserExample> corpus);

MaxentModel train_parser(std::span<const ParserExample> corpus, double c, const OptimizerOptions& options = {});

struct ParseResult {
  RstNode tree;  // binarized, unlabeled root
  double score = 0.0;  // sum of action log-probabilities
  std::vector<Action> actions;
};

/// Action inventory and model bundled for decoding.
class RstParser {
 public:
  explicit RstParser(MaxentModel model);

  const MaxentModel& model() const noexcept { return model_; }
  const std::vector<Action>& inventory() const noexcept { return inventory_; }

  /// Always the legal action with the highest probability; ties go to the
  /// lexicographically smaller action.
  ParseResult parse_greedy(const Document& doc, std::span<const Edu> edus) const;
  /// Beam search returning up to k complete parses, best first. Ties are
  /// broken by the action sequence, lexicographically. Throws InputError if
  /// k > beam.
  std::vector<ParseResult> parse_kbest(const Document& doc, std::span<const Edu> edus, int beam, int k) const;

  /// Log-probabilities of every inventory action in `state`.
  std::vector<double> action_log_probabilities(const ParserState& state, const ParseContext& ctx) const;

 private:
  MaxentModel model_;
  std::vector<Action> inventory_;
};

}  // namespace discourse
