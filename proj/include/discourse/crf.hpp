#pragma once

#include <span>
#include <string>
#include <vector>

#include "discourse/features.hpp"
#include "discourse/optimizer.hpp"

namespace discourse {

/// One training sequence: a feature vector and a gold tag per position.
struct TaggedSequence {
  std::vector<FeatureVector> positions;
  std::vector<int> tags;
};

/// Linear-chain CRF with emission weights (feature, tag) and a dense
/// tag-bigram transition matrix. Weights live in one flat vector:
/// emissions row-major by feature, then transitions row-major by previous tag.
class CrfModel {
 public:
  CrfModel() = default;
  /// All-zero weights. Needs at least two tags and c > 0.
  CrfModel(std::vector<std::string> tags, FeatureVocabulary features, double c);

  const std::vector<std::string>& tags() const noexcept { return tags_; }
  int num_tags() const noexcept { return static_cast<int>(tags_.size()); }
  const FeatureVocabulary& features() const noexcept { return features_; }
  int num_features() const noexcept { return features_.size(); }
  double c() const noexcept { return c_; }

  std::span<const double> weights() const noexcept { return weights_; }
  std::span<double> weights() noexcept { return weights_; }
  void set_weights(std::vector<double> w);

  size_t emission_index(int feature, int tag) const noexcept {
    return static_cast<size_t>(feature) * tags_.size() + tag;
  }
  size_t transition_index(int from, int to) const noexcept {
    return static_cast<size_t>(num_features()) * tags_.size() + static_cast<size_t>(from) * tags_.size() + to;
  }
  double emission(int feature, int tag) const { return weights_[emission_index(feature, tag)]; }
  double transition(int from, int to) const { return weights_[transition_index(from, to)]; }

 private:
  std::vector<std::string> tags_;
  FeatureVocabulary features_;
  double c_ = 1.0;
  std::vector<double> weights_;
};

struct ForwardBackward {
  double log_partition = 0.0;
  /// marginals[t][y] = p(tag_t = y | sequence)
  std::vector<std::vector<double>> marginals;
};

ForwardBackward crf_forward_backward(const CrfModel& model, std::span<const FeatureVector> sequence);

/// Highest-scoring tag sequence; ties go to the lower tag index.
std::vector<int> crf_viterbi(const CrfModel& model, std::span<const FeatureVector> sequence);

/// Unnormalized score of a tag assignment.
double crf_score(const CrfModel& model, std::span<const FeatureVector> sequence, std::span<const int> tags);

struct ObjectiveValue {
  double value = 0.0;
  std::vector<double> gradient;
};

/// -sum log p(gold | seq) + |w|^2 / (2c), with its gradient.
ObjectiveValue crf_objective(const CrfModel& model, std::span<const TaggedSequence> data);

/// Negative log-likelihood (no penalty) of `data` under flat weights `w`;
/// accumulates the gradient into `grad`.
double crf_negative_log_likelihood(int num_features, int num_tags, std::span<const double> w,
                                   std::span<const TaggedSequence> data, std::span<double> grad);

/// Fits an l2-regularized CRF (penalty 1/c) from zero weights.
CrfModel train_crf(std::vector<std::string> tags, FeatureVocabulary features,
                   std::span<const TaggedSequence> data, double c, const OptimizerOptions& options = {});

}  // namespace discourse
