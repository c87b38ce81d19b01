#include "hetsim/geometry.hpp"

#include <numbers>

namespace hetsim {

Point2D sample_in_disc(Point2D center, double radius, Rng& rng) {
  const double angle = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
  const double r = radius * std::sqrt(uniform_real(rng, 0.0, 1.0));
  return {center.x + r * std::cos(angle), center.y + r * std::sin(angle)};
}

}  // namespace hetsim
