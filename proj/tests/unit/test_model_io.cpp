#include <gtest/gtest.h>

#include <sstream>

#include "discourse/errors.hpp"
#include "discourse/model_io.hpp"
#include "random_models.hpp"

using namespace discourse;
using discourse::support::Rng;

TEST(ModelIo, CrfRoundTrip) {
  Rng rng(1);
  auto m = support::random_crf(rng, 7, 2, 3.0);
  std::stringstream s;
  save_model(s, m);
  auto back = load_crf_model(s);
  EXPECT_EQ(back.tags(), m.tags());
  EXPECT_EQ(back.c(), m.c());
  EXPECT_TRUE(std::equal(back.weights().begin(), back.weights().end(), m.weights().begin(), m.weights().end()));
}

TEST(ModelIo, MaxentRoundTripIsByteStable) {
  Rng rng(2);
  auto w = support::random_weights(rng, 20, 2.0);
  for (size_t i = 0; i < w.size(); i += 3) w[i] = 0;
  MaxentModel m({"S", "U:nucleus:span", "B:nucleus:span,satellite:attribution", "B:nucleus:list*,nucleus:list"},
                support::numbered_vocabulary(5), w, 0.25);
  std::stringstream s;
  save_model(s, m);
  const std::string first = s.str();
  auto back = load_maxent_model(s);
  EXPECT_EQ(back.dense(), m.dense());
  EXPECT_EQ(back.classes(), m.classes());
  std::stringstream again;
  save_model(again, back);
  EXPECT_EQ(again.str(), first);
}

TEST(ModelIo, KindMismatchAndGarbageRejected) {
  Rng rng(3);
  std::stringstream s;
  save_model(s, support::random_crf(rng, 2, 2, 1.0));
  EXPECT_THROW(load_maxent_model(s), Error);
  std::stringstream junk("hello\n");
  EXPECT_THROW(load_crf_model(junk), Error);
}

TEST(ModelIo, ShortestRoundTripDoubles) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.0), "-2");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x)), x);
}
