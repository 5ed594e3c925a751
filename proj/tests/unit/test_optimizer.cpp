#include <gtest/gtest.h>

#include <cmath>

#include "discourse/crf.hpp"
#include "discourse/errors.hpp"
#include "discourse/grid_search.hpp"
#include "discourse/optimizer.hpp"
#include "random_models.hpp"

using namespace discourse;

namespace {

double quadratic(std::span<const double> w, std::span<double> g) {
  g[0] = 2 * (w[0] - 3);
  return (w[0] - 3) * (w[0] - 3);
}

}  // namespace

TEST(Optimizer, Quadratic) {
  auto r = optimize(quadratic, Penalty::none(), {0.0});
  EXPECT_EQ(r.status, OptimizeStatus::converged);
  EXPECT_NEAR(r.weights[0], 3.0, 1e-5);
}

TEST(Optimizer, StrongL1GivesExactZero) {
  // (w-3)^2 + 10|w| is minimized at 0 (|f'(0)| = 6 < 10).
  auto r = optimize(quadratic, Penalty::l1(10.0), {0.0});
  EXPECT_EQ(r.weights[0], 0.0);
  auto from_far = optimize(quadratic, Penalty::l1(10.0), {5.0});
  EXPECT_EQ(from_far.weights[0], 0.0);
}

TEST(Optimizer, WeakL1SoftThresholds) {
  // minimum of (w-3)^2 + |w| is 2.5
  auto r = optimize(quadratic, Penalty::l1(1.0), {0.0});
  EXPECT_NEAR(r.weights[0], 2.5, 1e-5);
}

TEST(Optimizer, L2Shrinks) {
  // (w-3)^2 + w^2 / 2 -> w = 2
  auto r = optimize(quadratic, Penalty::l2(1.0), {0.0});
  EXPECT_NEAR(r.weights[0], 2.0, 1e-5);
}

TEST(Optimizer, Rosenbrock) {
  auto f = [](std::span<const double> w, std::span<double> g) {
    const double a = 1 - w[0], b = w[1] - w[0] * w[0];
    g[0] = -2 * a - 400 * w[0] * b;
    g[1] = 200 * b;
    return a * a + 100 * b * b;
  };
  auto r = optimize(f, Penalty::none(), {-1.2, 1.0});
  EXPECT_NEAR(r.weights[0], 1.0, 1e-4);
  EXPECT_NEAR(r.weights[1], 1.0, 1e-4);
}

TEST(Optimizer, TraceDecreases) {
  support::Rng rng(5);
  auto data = support::random_tagged_data(rng, 8, 3, 20, 6);
  CrfModel m({"a", "b", "c"}, support::numbered_vocabulary(8), 1.0);
  auto f = [&](std::span<const double> w, std::span<double> g) {
    std::fill(g.begin(), g.end(), 0.0);
    return crf_negative_log_likelihood(8, 3, w, data, g);
  };
  for (auto pen : {Penalty::l2(1.0), Penalty::l1(0.5)}) {
    auto r = optimize(f, pen, std::vector<double>(m.weights().size(), 0.0));
    for (size_t i = 1; i < r.trace.size(); ++i) EXPECT_LE(r.trace[i], r.trace[i - 1]);
  }
}

TEST(Optimizer, SelfConsistentOnCrf) {
  support::Rng rng(21);
  auto data = support::random_tagged_data(rng, 10, 2, 20, 8);
  auto f = [&](std::span<const double> w, std::span<double> g) {
    std::fill(g.begin(), g.end(), 0.0);
    return crf_negative_log_likelihood(10, 2, w, data, g);
  };
  const size_t n = 10 * 2 + 4;
  auto normal = optimize(f, Penalty::l2(1.0), std::vector<double>(n, 0.0));
  auto tight = optimize(f, Penalty::l2(1.0), std::vector<double>(n, 0.0), {1e-10, 5000, 10});
  EXPECT_NEAR(normal.value, tight.value, 1e-6);
}

TEST(Optimizer, NonFiniteObjectiveThrows) {
  auto f = [](std::span<const double> w, std::span<double> g) {
    g[0] = -1;
    return w[0] > 0.5 ? std::nan("") : -w[0];
  };
  EXPECT_THROW(optimize(f, Penalty::none(), {0.0}), OptimizationError);
  auto bad_start = [](std::span<const double>, std::span<double> g) {
    g[0] = 0;
    return std::numeric_limits<double>::infinity();
  };
  EXPECT_THROW(optimize(bad_start, Penalty::none(), {0.0}), OptimizationError);
}

TEST(Optimizer, Deterministic) {
  support::Rng rng(2);
  auto data = support::random_tagged_data(rng, 6, 2, 10, 5);
  auto f = [&](std::span<const double> w, std::span<double> g) {
    std::fill(g.begin(), g.end(), 0.0);
    return crf_negative_log_likelihood(6, 2, w, data, g);
  };
  auto a = optimize(f, Penalty::l1(0.1), std::vector<double>(16, 0.0));
  auto b = optimize(f, Penalty::l1(0.1), std::vector<double>(16, 0.0));
  EXPECT_EQ(a.weights, b.weights);
}

TEST(GridSearch, SingleCandidate) {
  auto r = grid_search(GridSpec{{1.0}, "m"}, [](double c) { return c * 2; }, [](double) { return 0.5; });
  EXPECT_EQ(r.best_c, 1.0);
  EXPECT_EQ(r.best_model, 2.0);
}

TEST(GridSearch, ConstructedPeak) {
  auto grid = GridSpec::powers_of_two(-6, 6, "m");
  EXPECT_EQ(grid.values.size(), 13u);
  EXPECT_EQ(grid.values.front(), 1.0 / 64);
  auto r = grid_search(grid, [](double c) { return c; }, [](double c) { return -std::abs(std::log2(c)); });
  EXPECT_EQ(r.best_c, 1.0);
  EXPECT_EQ(r.table.size(), 13u);
  EXPECT_EQ(GridSpec::powers_of_two(-4, 4, "m").values.size(), 9u);
}

TEST(GridSearch, TiesGoToSmallerC) {
  auto r = grid_search(GridSpec::powers_of_two(-2, 2, "m"), [](double c) { return c; }, [](double) { return 1.0; });
  EXPECT_EQ(r.best_c, 0.25);
}

TEST(GridSearch, ErrorsNameTheCandidate) {
  try {
    grid_search(
        GridSpec{{1.0, 2.0}, "m"},
        [](double c) {
          if (c == 2.0) throw InputError("boom");
          return c;
        },
        [](double) { return 0.0; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("c = 2"), std::string::npos);
  }
  EXPECT_THROW(grid_search(GridSpec{{}, "m"}, [](double c) { return c; }, [](double) { return 0.0; }), InputError);
}
