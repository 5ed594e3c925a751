#pragma once

#include <span>
#include <string>
#include <vector>

#include "discourse/crf.hpp"
#include "discourse/features.hpp"
#include "discourse/optimizer.hpp"

namespace discourse {

struct LabeledInstance {
  FeatureVector features;
  int label = 0;
};

/// Multinomial logistic regression with sparse storage: each feature keeps
/// only its nonzero (class, weight) entries.
class MaxentModel {
 public:
  struct Entry {
    int label;
    double weight;
  };

  MaxentModel() = default;
  /// `dense` is row-major (feature, class); exact zeros are not stored.
  MaxentModel(std::vector<std::string> classes, FeatureVocabulary features, std::span<const double> dense,
              double c);

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  int num_classes() const noexcept { return static_cast<int>(classes_.size()); }
  const FeatureVocabulary& features() const noexcept { return features_; }
  int num_features() const noexcept { return features_.size(); }
  double c() const noexcept { return c_; }
  int num_nonzero() const noexcept { return static_cast<int>(entries_.size()); }

  std::span<const Entry> row(int feature) const {
    return std::span<const Entry>(entries_).subspan(row_begin_[feature], row_begin_[feature + 1] - row_begin_[feature]);
  }

  /// Linear scores w_k . x for every class.
  std::vector<double> scores(const FeatureVector& x) const;
  /// log softmax of scores().
  std::vector<double> log_probabilities(const FeatureVector& x) const;
  std::vector<double> dense() const;

  /// Copy without features whose rows are empty; ids are renumbered in order.
  MaxentModel compact() const;

 private:
  std::vector<std::string> classes_;
  FeatureVocabulary features_;
  double c_ = 1.0;
  std::vector<size_t> row_begin_{0};
  std::vector<Entry> entries_;
};

/// Smooth part -sum log softmax(w.x)[gold] and its gradient. The l1 term
/// (strength 1/c) is left to the optimizer.
ObjectiveValue maxent_objective(const MaxentModel& model, std::span<const LabeledInstance> data);

double maxent_negative_log_likelihood(int num_features, int num_classes, std::span<const double> w,
                                      std::span<const LabeledInstance> data, std::span<double> grad);

/// Fits the l1-penalized model (strength 1/c) with OWL-QN from zero weights,
/// then compacts it.
MaxentModel train_maxent(std::vector<std::string> classes, FeatureVocabulary features,
                         std::span<const LabeledInstance> data, double c, const OptimizerOptions& options = {});

}  // namespace discourse
