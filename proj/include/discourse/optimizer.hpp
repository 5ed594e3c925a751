#pragma once

#include <functional>
#include <span>
#include <vector>

namespace discourse {

/// Penalty added to a smooth objective. Strengths are the multiplier of the
/// norm (`strength * |w|_1` or `strength / 2 * |w|^2`).
struct Penalty {
  enum class Kind { none, l1, l2 };
  Kind kind = Kind::none;
  double strength = 0.0;

  static Penalty none() { return {}; }
  static Penalty l1(double s) { return {Kind::l1, s}; }
  static Penalty l2(double s) { return {Kind::l2, s}; }
};

struct OptimizerOptions {
  double tolerance = 1e-5;  // on the (pseudo-)gradient 2-norm
  int max_iterations = 1000;
  int history = 10;
};

enum class OptimizeStatus { converged, max_iterations, no_progress };

struct OptimizeResult {
  std::vector<double> weights;
  double value = 0.0;  // penalized objective at `weights`
  double gradient_norm = 0.0;
  int iterations = 0;
  OptimizeStatus status = OptimizeStatus::max_iterations;
  /// Penalized objective after each accepted step (first entry: the start).
  std::vector<double> trace;
};

/// Evaluates the smooth part at `w`, writing its gradient into `grad`.
using SmoothObjective = std::function<double(std::span<const double> w, std::span<double> grad)>;

/// Limited-memory quasi-Newton minimization. With an l1 penalty this is
/// OWL-QN (orthant-wise, produces exact zeros); otherwise plain L-BFGS with a
/// backtracking Armijo line search. Deterministic. Throws OptimizationError if
/// the objective becomes non-finite.
OptimizeResult optimize(const SmoothObjective& objective, const Penalty& penalty,
                        std::vector<double> init, const OptimizerOptions& options = {});

}  // namespace discourse
