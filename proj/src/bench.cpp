#include "discourse/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "discourse/errors.hpp"

namespace discourse {

TimingStats summarize_timings(std::span<const double> seconds, std::span<const double> sizes) {
  if (seconds.size() != sizes.size()) throw InputError("timings and sizes differ in length");
  TimingStats s;
  s.count = static_cast<int>(seconds.size());
  if (s.count == 0) return s;
  const double n = s.count;
  double sum = 0, sx = 0;
  for (size_t i = 0; i < seconds.size(); ++i) {
    sum += seconds[i];
    sx += sizes[i];
  }
  s.mean = sum / n;
  const double mx = sx / n;
  s.min = *std::min_element(seconds.begin(), seconds.end());
  s.max = *std::max_element(seconds.begin(), seconds.end());
  double ss = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < seconds.size(); ++i) {
    const double dy = seconds[i] - s.mean;
    const double dx = sizes[i] - mx;
    ss += dy * dy;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  s.sd = s.count > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  if (sxx > 0) {
    s.slope = sxy / sxx;
    s.intercept = s.mean - s.slope * mx;
    s.r2 = ss > 0 ? (sxy * sxy) / (sxx * ss) : 1.0;
  } else {
    s.intercept = s.mean;
  }
  return s;
}

double median_seconds(const std::function<void()>& fn, int repeats) {
  if (repeats < 1) throw InputError("repeats must be positive");
  std::vector<double> t;
  t.reserve(repeats);
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return repeats % 2 ? t[repeats / 2] : 0.5 * (t[repeats / 2 - 1] + t[repeats / 2]);
}

}  // namespace discourse
