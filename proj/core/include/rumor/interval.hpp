#pragma once

#include <cmath>
#include <limits>

namespace rumor {

/// Closed interval of reals used for certified enclosures. An interval with
/// lo = +inf encodes a divergent quantity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static constexpr Interval point(double v) { return {v, v}; }
  static constexpr Interval infinite() {
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }

  bool is_infinite() const { return std::isinf(lo); }
  double mid() const { return is_infinite() ? lo : 0.5 * (lo + hi); }
  double radius() const { return is_infinite() ? 0.0 : 0.5 * (hi - lo); }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

inline Interval operator+(Interval a, Interval b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator+(double a, Interval b) { return {a + b.lo, a + b.hi}; }

inline Interval operator*(double s, Interval b) {
  return s >= 0 ? Interval{s * b.lo, s * b.hi} : Interval{s * b.hi, s * b.lo};
}

}  // namespace rumor
