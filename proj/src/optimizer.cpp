#include "discourse/optimizer.hpp"

#include <cmath>
#include <deque>
#include <numeric>

#include "discourse/errors.hpp"

namespace discourse {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

struct Curvature {
  std::vector<double> s;
  std::vector<double> y;
  double rho;
};

class Evaluator {
 public:
  Evaluator(const SmoothObjective& objective, const Penalty& penalty)
      : objective_(objective), penalty_(penalty) {}

  /// Penalized value; `grad` receives the gradient of everything except an l1
  /// term.
  double operator()(std::span<const double> w, std::span<double> grad) const {
    std::fill(grad.begin(), grad.end(), 0.0);
    double value = objective_(w, grad);
    if (penalty_.kind == Penalty::Kind::l2) {
      value += 0.5 * penalty_.strength * dot(w, w);
      for (size_t i = 0; i < w.size(); ++i) grad[i] += penalty_.strength * w[i];
    } else if (penalty_.kind == Penalty::Kind::l1) {
      double l1 = 0.0;
      for (double x : w) l1 += std::abs(x);
      value += penalty_.strength * l1;
    }
    if (!std::isfinite(value))
      throw OptimizationError("objective is not finite", std::vector<double>(w.begin(), w.end()));
    return value;
  }

 private:
  const SmoothObjective& objective_;
  Penalty penalty_;
};

void pseudo_gradient(std::span<const double> w, std::span<const double> g, double lambda,
                     std::span<double> out) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) {
      out[i] = g[i] + lambda;
    } else if (w[i] < 0) {
      out[i] = g[i] - lambda;
    } else if (g[i] + lambda < 0) {
      out[i] = g[i] + lambda;
    } else if (g[i] - lambda > 0) {
      out[i] = g[i] - lambda;
    } else {
      out[i] = 0.0;
    }
  }
}

// Two-loop recursion: returns -H * v.
void descent_direction(const std::deque<Curvature>& history, std::span<const double> v,
                       std::span<double> d) {
  std::copy(v.begin(), v.end(), d.begin());
  std::vector<double> alpha(history.size());
  for (size_t k = history.size(); k-- > 0;) {
    const auto& h = history[k];
    alpha[k] = h.rho * dot(h.s, d);
    for (size_t i = 0; i < d.size(); ++i) d[i] -= alpha[k] * h.y[i];
  }
  if (!history.empty()) {
    const auto& last = history.back();
    const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
    for (double& x : d) x *= gamma;
  }
  for (size_t k = 0; k < history.size(); ++k) {
    const auto& h = history[k];
    const double beta = h.rho * dot(h.y, d);
    for (size_t i = 0; i < d.size(); ++i) d[i] += (alpha[k] - beta) * h.s[i];
  }
  for (double& x : d) x = -x;
}

double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace

OptimizeResult optimize(const SmoothObjective& objective, const Penalty& penalty,
                        std::vector<double> init, const OptimizerOptions& options) {
  const bool l1 = penalty.kind == Penalty::Kind::l1;
  const double lambda = l1 ? penalty.strength : 0.0;
  const size_t n = init.size();
  Evaluator eval(objective, penalty);

  OptimizeResult result;
  std::vector<double> w = std::move(init);
  std::vector<double> g(n), pg(n), d(n), w_new(n), g_new(n), orthant(n);
  double f = eval(w, g);
  pseudo_gradient(w, g, lambda, pg);
  result.trace.push_back(f);

  std::deque<Curvature> history;
  int iter = 0;
  OptimizeStatus status = OptimizeStatus::max_iterations;
  for (; iter < options.max_iterations; ++iter) {
    if (norm(pg) < options.tolerance) {
      status = OptimizeStatus::converged;
      break;
    }
    descent_direction(history, pg, d);
    if (l1) {
      for (size_t i = 0; i < n; ++i)
        if (d[i] * pg[i] >= 0) d[i] = 0.0;
    }
    double slope = dot(pg, d);
    if (slope >= 0) {
      history.clear();
      for (size_t i = 0; i < n; ++i) d[i] = -pg[i];
      slope = -dot(pg, pg);
    }
    if (l1) {
      for (size_t i = 0; i < n; ++i) orthant[i] = w[i] != 0 ? sign(w[i]) : sign(-pg[i]);
    }

    double step = history.empty() ? 1.0 / std::max(1.0, norm(d)) : 1.0;
    bool accepted = false;
    double f_new = f;
    for (int ls = 0; ls < 60; ++ls) {
      for (size_t i = 0; i < n; ++i) {
        w_new[i] = w[i] + step * d[i];
        if (l1 && sign(w_new[i]) != orthant[i]) w_new[i] = 0.0;
      }
      f_new = eval(w_new, g_new);
      double decrease = 0.0;
      for (size_t i = 0; i < n; ++i) decrease += pg[i] * (w_new[i] - w[i]);
      if (f_new <= f + 1e-4 * decrease && f_new <= f) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      status = OptimizeStatus::no_progress;
      break;
    }

    Curvature c{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (size_t i = 0; i < n; ++i) {
      c.s[i] = w_new[i] - w[i];
      c.y[i] = g_new[i] - g[i];
    }
    const double sy = dot(c.s, c.y);
    if (sy > 1e-12) {
      c.rho = 1.0 / sy;
      history.push_back(std::move(c));
      if (static_cast<int>(history.size()) > options.history) history.pop_front();
    }
    w.swap(w_new);
    g.swap(g_new);
    f = f_new;
    pseudo_gradient(w, g, lambda, pg);
    result.trace.push_back(f);
  }

  result.gradient_norm = norm(pg);
  if (status == OptimizeStatus::max_iterations && result.gradient_norm < options.tolerance)
    status = OptimizeStatus::converged;
  result.weights = std::move(w);
  result.value = f;
  result.iterations = iter;
  result.status = status;
  return result;
}

}  // namespace discourse
