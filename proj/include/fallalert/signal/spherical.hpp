#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fallalert::signal {

/// (r, theta, phi): magnitude, polar angle in [0, pi], azimuth in (-pi, pi].
struct SphericalTriple {
  double r = 0;
  double theta = 0;
  double phi = 0;
};

// Conventions for degenerate inputs: theta = 0 when r = 0, phi = 0 when
// x = y = 0. Azimuth uses the quadrant-aware two-argument arctangent.
inline SphericalTriple to_spherical(double x, double y, double z) {
  SphericalTriple s;
  s.r = std::sqrt(x * x + y * y + z * z);
  if (s.r == 0.0) return s;
  s.theta = std::acos(std::clamp(z / s.r, -1.0, 1.0));
  if (x == 0.0 && y == 0.0) {
    s.phi = 0.0;
  } else {
    s.phi = std::atan2(y, x);
    if (s.phi <= -std::numbers::pi) s.phi = std::numbers::pi;
  }
  return s;
}

}  // namespace fallalert::signal
