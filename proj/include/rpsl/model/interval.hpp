#pragma once

namespace rpsl::model {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo <= v && v <= hi; }
  bool degenerate() const { return lo == hi; }
  double width() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace rpsl::model
