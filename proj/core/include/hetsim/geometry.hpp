#pragma once

#include <cmath>

#include "hetsim/random.hpp"

namespace hetsim {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2D&) const = default;
};

inline double distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Area-uniform point in the closed disc of the given radius.
Point2D sample_in_disc(Point2D center, double radius, Rng& rng);

}  // namespace hetsim
