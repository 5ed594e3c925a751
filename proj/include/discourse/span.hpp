#pragma once

#include <compare>
#include <string>

namespace discourse {

/// Half-open integer interval [lo, hi). Used for token and EDU ranges.
struct Span {
  int lo = 0;
  int hi = 0;

  constexpr int size() const noexcept { return hi - lo; }
  constexpr bool empty() const noexcept { return hi <= lo; }
  constexpr bool contains(int i) const noexcept { return lo <= i && i < hi; }
  constexpr bool contains(Span other) const noexcept { return lo <= other.lo && other.hi <= hi; }

  friend constexpr auto operator<=>(const Span&, const Span&) = default;
};

inline std::string to_string(Span s) {
  return "[" + std::to_string(s.lo) + "," + std::to_string(s.hi) + ")";
}

}  // namespace discourse
