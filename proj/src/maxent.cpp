#include "discourse/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "discourse/errors.hpp"

namespace discourse {
namespace {

void log_softmax_in_place(std::vector<double>& s) {
  const double m = *std::max_element(s.begin(), s.end());
  double z = 0.0;
  for (double x : s) z += std::exp(x - m);
  const double log_z = m + std::log(z);
  for (double& x : s) x -= log_z;
}

}  // namespace

MaxentModel::MaxentModel(std::vector<std::string> classes, FeatureVocabulary features,
                         std::span<const double> dense, double c)
    : classes_(std::move(classes)), features_(std::move(features)), c_(c) {
  if (classes_.empty()) throw InputError("a classifier needs at least one class");
  if (!(c_ > 0)) throw InputError("regularization strength c must be positive");
  const size_t K = classes_.size();
  if (dense.size() != static_cast<size_t>(num_features()) * K)
    throw InputError("dense weight matrix has the wrong size");
  row_begin_.reserve(num_features() + 1);
  for (int f = 0; f < num_features(); ++f) {
    for (size_t k = 0; k < K; ++k) {
      const double w = dense[f * K + k];
      if (!std::isfinite(w)) throw InputError("non-finite weight");
      if (w != 0.0) entries_.push_back({static_cast<int>(k), w});
    }
    row_begin_.push_back(entries_.size());
  }
}

std::vector<double> MaxentModel::scores(const FeatureVector& x) const {
  std::vector<double> s(classes_.size(), 0.0);
  for (const auto& [f, v] : x)
    for (const auto& e : row(f)) s[e.label] += v * e.weight;
  return s;
}

std::vector<double> MaxentModel::log_probabilities(const FeatureVector& x) const {
  auto s = scores(x);
  log_softmax_in_place(s);
  return s;
}

std::vector<double> MaxentModel::dense() const {
  const size_t K = classes_.size();
  std::vector<double> out(static_cast<size_t>(num_features()) * K, 0.0);
  for (int f = 0; f < num_features(); ++f)
    for (const auto& e : row(f)) out[f * K + e.label] = e.weight;
  return out;
}

MaxentModel MaxentModel::compact() const {
  FeatureVocabulary kept;
  std::vector<double> dense_kept;
  const size_t K = classes_.size();
  for (int f = 0; f < num_features(); ++f) {
    auto r = row(f);
    if (r.empty()) continue;
    kept.intern(features_.name(f));
    const size_t base = dense_kept.size();
    dense_kept.resize(base + K, 0.0);
    for (const auto& e : r) dense_kept[base + e.label] = e.weight;
  }
  return MaxentModel(classes_, std::move(kept), dense_kept, c_);
}

double maxent_negative_log_likelihood(int num_features, int num_classes, std::span<const double> w,
                                      std::span<const LabeledInstance> data, std::span<double> grad) {
  const size_t K = num_classes;
  std::vector<double> s(K);
  double nll = 0.0;
  for (const auto& ex : data) {
    if (ex.label < 0 || ex.label >= num_classes)
      throw InputError("class " + std::to_string(ex.label) + " outside the class set");
    std::fill(s.begin(), s.end(), 0.0);
    for (const auto& [f, v] : ex.features) {
      if (f < 0 || f >= num_features) throw InputError("feature id out of range");
      for (size_t k = 0; k < K; ++k) s[k] += v * w[f * K + k];
    }
    log_softmax_in_place(s);
    nll -= s[ex.label];
    for (size_t k = 0; k < K; ++k) {
      const double delta = std::exp(s[k]) - (static_cast<int>(k) == ex.label ? 1.0 : 0.0);
      for (const auto& [f, v] : ex.features) grad[f * K + k] += v * delta;
    }
  }
  return nll;
}

ObjectiveValue maxent_objective(const MaxentModel& model, std::span<const LabeledInstance> data) {
  ObjectiveValue out;
  auto w = model.dense();
  out.gradient.assign(w.size(), 0.0);
  out.value = maxent_negative_log_likelihood(model.num_features(), model.num_classes(), w, data, out.gradient);
  return out;
}

MaxentModel train_maxent(std::vector<std::string> classes, FeatureVocabulary features,
                         std::span<const LabeledInstance> data, double c, const OptimizerOptions& options) {
  if (!(c > 0)) throw InputError("regularization strength c must be positive");
  const int F = features.size();
  const int K = static_cast<int>(classes.size());
  SmoothObjective nll = [&](std::span<const double> w, std::span<double> grad) {
    return maxent_negative_log_likelihood(F, K, w, data, grad);
  };
  auto result = optimize(nll, Penalty::l1(1.0 / c), std::vector<double>(static_cast<size_t>(F) * K, 0.0), options);
  return MaxentModel(std::move(classes), std::move(features), result.weights, c).compact();
}

}  // namespace discourse
