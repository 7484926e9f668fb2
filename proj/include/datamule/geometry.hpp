#pragma once

#include <cmath>

namespace datamule {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Closed interval used for random draws (deadlines, node energies).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool valid() const { return lo >= 0.0 && lo <= hi; }
};

}  // namespace datamule
