#include "discourse/crf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "discourse/errors.hpp"

namespace discourse {
namespace {

double log_sum_exp(std::span<const double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

// Flat-weight view shared by inference and the objective.
struct Lattice {
  int length;
  int tags;
  std::vector<double> emit;   // length x tags
  std::vector<double> trans;  // tags x tags
  std::vector<double> alpha;  // length x tags (log)
  std::vector<double> beta;
  double log_z = 0.0;

  Lattice(int num_features, int num_tags, std::span<const double> w, std::span<const FeatureVector> seq)
      : length(static_cast<int>(seq.size())),
        tags(num_tags),
        emit(seq.size() * num_tags, 0.0),
        trans(w.begin() + static_cast<size_t>(num_features) * num_tags,
              w.begin() + static_cast<size_t>(num_features) * num_tags + num_tags * num_tags) {
    for (int t = 0; t < length; ++t)
      for (const auto& [f, v] : seq[t])
        for (int y = 0; y < tags; ++y) emit[t * tags + y] += v * w[static_cast<size_t>(f) * tags + y];
  }

  double e(int t, int y) const { return emit[t * tags + y]; }
  double a(int from, int to) const { return trans[from * tags + to]; }

  void forward_backward() {
    alpha.assign(emit.size(), 0.0);
    beta.assign(emit.size(), 0.0);
    std::vector<double> buf(tags);
    for (int y = 0; y < tags; ++y) alpha[y] = e(0, y);
    for (int t = 1; t < length; ++t)
      for (int y = 0; y < tags; ++y) {
        for (int p = 0; p < tags; ++p) buf[p] = alpha[(t - 1) * tags + p] + a(p, y);
        alpha[t * tags + y] = e(t, y) + log_sum_exp(buf);
      }
    for (int t = length - 2; t >= 0; --t)
      for (int p = 0; p < tags; ++p) {
        for (int y = 0; y < tags; ++y) buf[y] = a(p, y) + e(t + 1, y) + beta[(t + 1) * tags + y];
        beta[t * tags + p] = log_sum_exp(buf);
      }
    log_z = log_sum_exp(std::span<const double>(alpha).subspan((length - 1) * tags, tags));
  }

  double marginal(int t, int y) const { return std::exp(alpha[t * tags + y] + beta[t * tags + y] - log_z); }
  double pair_marginal(int t, int p, int y) const {
    return std::exp(alpha[(t - 1) * tags + p] + a(p, y) + e(t, y) + beta[t * tags + y] - log_z);
  }
};

void require_nonempty(std::span<const FeatureVector> seq) {
  if (seq.empty()) throw InputError("CRF inference on an empty sequence");
}

}  // namespace

CrfModel::CrfModel(std::vector<std::string> tags, FeatureVocabulary features, double c)
    : tags_(std::move(tags)), features_(std::move(features)), c_(c) {
  if (tags_.size() < 2) throw InputError("a CRF needs at least two tags");
  if (!(c_ > 0)) throw InputError("regularization strength c must be positive");
  weights_.assign(static_cast<size_t>(num_features()) * tags_.size() + tags_.size() * tags_.size(), 0.0);
}

void CrfModel::set_weights(std::vector<double> w) {
  if (w.size() != weights_.size()) throw InputError("CRF weight vector has the wrong size");
  weights_ = std::move(w);
}

ForwardBackward crf_forward_backward(const CrfModel& model, std::span<const FeatureVector> sequence) {
  require_nonempty(sequence);
  Lattice lat(model.num_features(), model.num_tags(), model.weights(), sequence);
  lat.forward_backward();
  ForwardBackward out;
  out.log_partition = lat.log_z;
  out.marginals.assign(lat.length, std::vector<double>(lat.tags));
  for (int t = 0; t < lat.length; ++t)
    for (int y = 0; y < lat.tags; ++y) out.marginals[t][y] = lat.marginal(t, y);
  return out;
}

std::vector<int> crf_viterbi(const CrfModel& model, std::span<const FeatureVector> sequence) {
  require_nonempty(sequence);
  Lattice lat(model.num_features(), model.num_tags(), model.weights(), sequence);
  const int T = lat.tags;
  std::vector<double> delta(lat.emit.size());
  std::vector<int> back(lat.emit.size(), 0);
  for (int y = 0; y < T; ++y) delta[y] = lat.e(0, y);
  for (int t = 1; t < lat.length; ++t)
    for (int y = 0; y < T; ++y) {
      int best = 0;
      double best_score = delta[(t - 1) * T] + lat.a(0, y);
      for (int p = 1; p < T; ++p) {
        double s = delta[(t - 1) * T + p] + lat.a(p, y);
        if (s > best_score) {
          best_score = s;
          best = p;
        }
      }
      delta[t * T + y] = best_score + lat.e(t, y);
      back[t * T + y] = best;
    }
  std::vector<int> path(lat.length);
  int last = 0;
  for (int y = 1; y < T; ++y)
    if (delta[(lat.length - 1) * T + y] > delta[(lat.length - 1) * T + last]) last = y;
  path.back() = last;
  for (int t = lat.length - 1; t > 0; --t) path[t - 1] = back[t * T + path[t]];
  return path;
}

double crf_score(const CrfModel& model, std::span<const FeatureVector> sequence, std::span<const int> tags) {
  if (tags.size() != sequence.size()) throw InputError("tag sequence length differs from input length");
  double s = 0.0;
  for (size_t t = 0; t < sequence.size(); ++t) {
    for (const auto& [f, v] : sequence[t]) s += v * model.emission(f, tags[t]);
    if (t > 0) s += model.transition(tags[t - 1], tags[t]);
  }
  return s;
}

double crf_negative_log_likelihood(int num_features, int num_tags, std::span<const double> w,
                                   std::span<const TaggedSequence> data, std::span<double> grad) {
  const size_t trans_offset = static_cast<size_t>(num_features) * num_tags;
  double nll = 0.0;
  for (const auto& ex : data) {
    if (ex.positions.empty()) throw InputError("empty training sequence");
    if (ex.tags.size() != ex.positions.size()) throw InputError("gold tags and positions differ in length");
    for (int y : ex.tags)
      if (y < 0 || y >= num_tags) throw InputError("gold tag " + std::to_string(y) + " outside the tag set");
    Lattice lat(num_features, num_tags, w, ex.positions);
    lat.forward_backward();
    double gold = 0.0;
    for (int t = 0; t < lat.length; ++t) {
      gold += lat.e(t, ex.tags[t]);
      if (t > 0) gold += lat.a(ex.tags[t - 1], ex.tags[t]);
    }
    nll += lat.log_z - gold;

    for (int t = 0; t < lat.length; ++t) {
      for (int y = 0; y < num_tags; ++y) {
        const double expected = lat.marginal(t, y) - (ex.tags[t] == y ? 1.0 : 0.0);
        if (expected == 0.0) continue;
        for (const auto& [f, v] : ex.positions[t]) grad[static_cast<size_t>(f) * num_tags + y] += v * expected;
      }
      if (t == 0) continue;
      for (int p = 0; p < num_tags; ++p)
        for (int y = 0; y < num_tags; ++y) grad[trans_offset + p * num_tags + y] += lat.pair_marginal(t, p, y);
      grad[trans_offset + ex.tags[t - 1] * num_tags + ex.tags[t]] -= 1.0;
    }
  }
  return nll;
}

ObjectiveValue crf_objective(const CrfModel& model, std::span<const TaggedSequence> data) {
  ObjectiveValue out;
  auto w = model.weights();
  out.gradient.assign(w.size(), 0.0);
  out.value = crf_negative_log_likelihood(model.num_features(), model.num_tags(), w, data, out.gradient);
  const double penalty = 1.0 / model.c();
  for (size_t i = 0; i < w.size(); ++i) {
    out.value += 0.5 * penalty * w[i] * w[i];
    out.gradient[i] += penalty * w[i];
  }
  return out;
}

CrfModel train_crf(std::vector<std::string> tags, FeatureVocabulary features,
                   std::span<const TaggedSequence> data, double c, const OptimizerOptions& options) {
  CrfModel model(std::move(tags), std::move(features), c);
  const int F = model.num_features();
  const int T = model.num_tags();
  SmoothObjective nll = [&](std::span<const double> w, std::span<double> grad) {
    return crf_negative_log_likelihood(F, T, w, data, grad);
  };
  std::vector<double> init(model.weights().begin(), model.weights().end());
  auto result = optimize(nll, Penalty::l2(1.0 / c), std::move(init), options);
  model.set_weights(std::move(result.weights));
  return model;
}

}  // namespace discourse
