#pragma once

#include <functional>
#include <span>
#include <vector>

namespace discourse {

/// Summary of per-document wall-clock times and a least-squares fit of time
/// against document size.
struct TimingStats {
  int count = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
  double min = 0.0;
  double max = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

TimingStats summarize_timings(std::span<const double> seconds, std::span<const double> sizes);

/// Median wall time of `repeats` calls to `fn`, on a monotonic clock.
double median_seconds(const std::function<void()>& fn, int repeats);

}  // namespace discourse
