#include <gtest/gtest.h>

#include <cmath>

#include "discourse/crf.hpp"
#include "discourse/errors.hpp"
#include "oracles.hpp"
#include "random_models.hpp"

using namespace discourse;
using discourse::support::Rng;

TEST(Crf, ZeroWeightsUniform) {
  CrfModel m({"a", "b", "c"}, support::numbered_vocabulary(4), 1.0);
  Rng rng(1);
  auto seq = support::random_sequence(rng, 4, 5);
  auto fb = crf_forward_backward(m, seq);
  EXPECT_NEAR(fb.log_partition, 5 * std::log(3.0), 1e-12);
  for (const auto& row : fb.marginals)
    for (double p : row) EXPECT_NEAR(p, 1.0 / 3, 1e-12);
  EXPECT_EQ(crf_viterbi(m, seq), std::vector<int>(5, 0));
}

TEST(Crf, LengthOneIsSoftmax) {
  Rng rng(2);
  auto m = support::random_crf(rng, 5, 3, 1.0);
  auto seq = support::random_sequence(rng, 5, 1);
  auto fb = crf_forward_backward(m, seq);
  double z = 0;
  std::vector<double> s(3);
  for (int y = 0; y < 3; ++y) {
    const std::vector<int> tags{y};
    s[y] = crf_score(m, seq, tags);
    z += std::exp(s[y]);
  }
  for (int y = 0; y < 3; ++y) EXPECT_NEAR(fb.marginals[0][y], std::exp(s[y]) / z, 1e-12);
}

TEST(Crf, MatchesEnumeration) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int T = support::uniform_int(rng, 2, 3);
    const int L = support::uniform_int(rng, 1, 6);
    auto m = support::random_crf(rng, 6, T, 1.5, trial % 2 == 1);
    auto seq = support::random_sequence(rng, 6, L);
    auto brute = support::enumerate_crf(m, seq);
    auto fb = crf_forward_backward(m, seq);
    EXPECT_NEAR(fb.log_partition, brute.log_partition, 1e-8);
    for (const auto& row : fb.marginals) {
      double sum = 0;
      for (double p : row) sum += p;
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
    EXPECT_EQ(crf_viterbi(m, seq), brute.argmax);
  }
}

TEST(Crf, DominantTagEverywhere) {
  CrfModel m({"a", "b"}, support::numbered_vocabulary(1), 1.0);
  std::vector<double> w(m.weights().size(), 0.0);
  w[m.emission_index(0, 1)] = 5.0;
  m.set_weights(w);
  std::vector<FeatureVector> seq(4, FeatureVector{{{0, 1.0}}});
  EXPECT_EQ(crf_viterbi(m, seq), std::vector<int>(4, 1));
}

TEST(Crf, EmptySequenceRejected) {
  CrfModel m({"a", "b"}, support::numbered_vocabulary(1), 1.0);
  EXPECT_THROW(crf_forward_backward(m, {}), InputError);
  EXPECT_THROW(crf_viterbi(m, {}), InputError);
  EXPECT_THROW(CrfModel({"a"}, support::numbered_vocabulary(1), 1.0), InputError);
}

TEST(CrfObjective, UniformCase) {
  CrfModel m({"a", "b"}, support::numbered_vocabulary(1), 1.0);
  std::vector<TaggedSequence> data{{{FeatureVector{{{0, 1.0}}}}, {1}}};
  auto obj = crf_objective(m, data);
  EXPECT_NEAR(obj.value, std::log(2.0), 1e-12);
  EXPECT_NEAR(obj.gradient[m.emission_index(0, 0)], 0.5, 1e-12);
  EXPECT_NEAR(obj.gradient[m.emission_index(0, 1)], -0.5, 1e-12);
}

TEST(CrfObjective, GradientMatchesFiniteDifferences) {
  Rng rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    auto m = support::random_crf(rng, 10, 3, 0.5);
    auto data = support::random_tagged_data(rng, 10, 3, 4, 5);
    auto obj = crf_objective(m, data);
    auto f = [&](std::span<const double> w) {
      CrfModel copy = m;
      copy.set_weights({w.begin(), w.end()});
      return crf_objective(copy, data).value;
    };
    auto fd = support::finite_difference(f, {m.weights().begin(), m.weights().end()}, 1e-5);
    EXPECT_LT(support::max_relative_error(obj.gradient, fd), 1e-4);
  }
}

TEST(CrfObjective, LargeCRecoversUnregularized) {
  Rng rng(5);
  auto m = support::random_crf(rng, 5, 2, 0.5);
  auto data = support::random_tagged_data(rng, 5, 2, 3, 4);
  std::vector<double> g(m.weights().size(), 0.0);
  const double nll = crf_negative_log_likelihood(5, 2, m.weights(), data, g);
  CrfModel big({"t0", "t1"}, support::numbered_vocabulary(5), 1e12);
  big.set_weights({m.weights().begin(), m.weights().end()});
  EXPECT_NEAR(crf_objective(big, data).value, nll, 1e-9);
}

TEST(CrfObjective, BadGoldTagRejected) {
  CrfModel m({"a", "b"}, support::numbered_vocabulary(1), 1.0);
  std::vector<TaggedSequence> data{{{FeatureVector{}}, {2}}};
  EXPECT_THROW(crf_objective(m, data), InputError);
}

TEST(CrfTraining, FitsSeparableData) {
  // Tag = feature 0 present.
  std::vector<TaggedSequence> data;
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    TaggedSequence s;
    s.positions = support::random_sequence(rng, 4, 5);
    for (const auto& x : s.positions) s.tags.push_back(!x.empty() && x.entries.front().first == 0 ? 1 : 0);
    data.push_back(std::move(s));
  }
  auto m = train_crf({"no", "yes"}, support::numbered_vocabulary(4), data, 10.0);
  for (const auto& s : data) EXPECT_EQ(crf_viterbi(m, s.positions), s.tags);
}
