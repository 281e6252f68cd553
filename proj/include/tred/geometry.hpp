#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace tred {

// Spatial point in 2 or 3 dimensions. The owning context (trajectory, tree,
// region) carries the dimension; unused coordinates stay zero so points of
// different dimension never mix.
struct Point {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
};

inline Point make_point(double x, double y) { return Point{{x, y, 0.0}}; }
inline Point make_point(double x, double y, double z) { return Point{{x, y, z}}; }

inline double dist_sq(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

inline double dist(const Point& a, const Point& b, int dim) {
  return std::sqrt(dist_sq(a, b, dim));
}

// L-infinity distance; the "cube" metric.
inline double max_norm_dist(const Point& a, const Point& b, int dim) {
  double m = 0.0;
  for (int k = 0; k < dim; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline bool finite(const Point& p, int dim) {
  for (int k = 0; k < dim; ++k)
    if (!std::isfinite(p[k])) return false;
  return true;
}

}  // namespace tred
