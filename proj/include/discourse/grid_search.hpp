#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "discourse/errors.hpp"

namespace discourse {

/// Candidate regularization strengths and the metric used to rank them.
struct GridSpec {
  std::vector<double> values;
  std::string metric;

  /// 2^lo, 2^(lo+1), ..., 2^hi.
  static GridSpec powers_of_two(int lo, int hi, std::string metric) {
    GridSpec g{{}, std::move(metric)};
    for (int e = lo; e <= hi; ++e) g.values.push_back(std::ldexp(1.0, e));
    return g;
  }
};

struct GridPoint {
  double c;
  double score;
};

template <class Model>
struct GridResult {
  double best_c = 0.0;
  Model best_model;
  std::vector<GridPoint> table;  // in grid order
};

/// Trains one model per candidate and keeps the best-scoring one. Ties go to
/// the smaller c. Exceptions from `train`/`score` are rethrown with the
/// failing c prepended.
template <class Train, class Score>
auto grid_search(const GridSpec& grid, Train&& train, Score&& score)
    -> GridResult<std::decay_t<decltype(train(1.0))>> {
  using Model = std::decay_t<decltype(train(1.0))>;
  if (grid.values.empty()) throw InputError("grid search needs at least one candidate");
  for (double c : grid.values)
    if (!(c > 0)) throw InputError("grid candidate c must be positive");

  GridResult<Model> result;
  bool have_best = false;
  double best_score = 0.0;
  for (double c : grid.values) {
    double s = 0.0;
    try {
      Model m = train(c);
      s = score(m);
      if (!have_best || s > best_score || (s == best_score && c < result.best_c)) {
        have_best = true;
        best_score = s;
        result.best_c = c;
        result.best_model = std::move(m);
      }
    } catch (const std::exception& e) {
      throw Error("grid search at c = " + std::to_string(c) + ": " + e.what());
    }
    result.table.push_back({c, s});
  }
  return result;
}

}  // namespace discourse
