#include "tred/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tred {

Trajectory::Trajectory(std::vector<double> times, std::vector<Point> points,
                       int dim, std::string id)
    : times_(std::move(times)), points_(std::move(points)), dim_(dim), id_(std::move(id)) {
  if (dim_ != 2 && dim_ != 3)
    throw std::invalid_argument("Trajectory: dimension must be 2 or 3");
  if (times_.size() < 2)
    throw std::invalid_argument("Trajectory: needs at least 2 samples");
  if (times_.size() != points_.size())
    throw std::invalid_argument("Trajectory: times/points length mismatch");
  for (std::size_t i = 0; i + 1 < times_.size(); ++i)
    if (!(times_[i] < times_[i + 1]))
      throw std::invalid_argument("Trajectory: times must be strictly increasing");
  for (const Point& p : points_)
    if (!finite(p, dim_))
      throw std::invalid_argument("Trajectory: non-finite coordinate");
}

std::size_t Trajectory::edge_index(double t) const {
  // first time > t, minus one; clamp so t_end maps onto the last edge
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t i = (it == times_.begin()) ? 0 : static_cast<std::size_t>(it - times_.begin() - 1);
  return std::min(i, times_.size() - 2);
}

Point Trajectory::at(double t) const {
  if (t < times_.front() || t > times_.back())
    throw std::domain_error("Trajectory::at: parameter outside domain");
  const std::size_t i = edge_index(t);
  if (t == times_[i]) return points_[i];
  if (t == times_[i + 1]) return points_[i + 1];
  const double u = (t - times_[i]) / (times_[i + 1] - times_[i]);
  Point out;
  for (int k = 0; k < dim_; ++k)
    out[k] = points_[i][k] + u * (points_[i + 1][k] - points_[i][k]);
  return out;
}

double Trajectory::trace_length(double a, double b, double cap) const {
  if (b <= a) return 0.0;
  const std::size_t i0 = edge_index(a);
  const std::size_t i1 = edge_index(b);
  Point prev = at(a);
  double len = 0.0;
  for (std::size_t i = i0 + 1; i <= i1; ++i) {
    if (times_[i] >= b) break;
    len += dist(prev, points_[i], dim_);
    if (len > cap) return len;
    prev = points_[i];
  }
  len += dist(prev, at(b), dim_);
  return len;
}

namespace {

// Menger curvature of a point triple: 4 * area / (|ab| |bc| |ca|).
double menger(const Point& a, const Point& b, const Point& c, int dim) {
  const double ab = dist(a, b, dim);
  const double bc = dist(b, c, dim);
  const double ca = dist(c, a, dim);
  if (ab == 0.0 || bc == 0.0 || ca == 0.0) return 0.0;
  double cross;
  if (dim == 2) {
    cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    cross = std::abs(cross);
  } else {
    const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    cross = std::sqrt(cx * cx + cy * cy + cz * cz);
  }
  return 2.0 * cross / (ab * bc * ca);
}

}  // namespace

CurvatureBound estimate_curvature_max(const Trajectory& traj) {
  if (traj.size() < 3)
    throw std::invalid_argument("estimate_curvature_max: needs at least 3 points");
  const auto& pts = traj.points();
  double kmax = 0.0;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i)
    kmax = std::max(kmax, menger(pts[i], pts[i + 1], pts[i + 2], traj.dim()));
  return CurvatureBound{kmax};
}

Trajectory time_delay_embed(const std::vector<double>& series, int delay,
                            int dim, std::string id) {
  if (delay < 1) throw std::invalid_argument("time_delay_embed: delay must be positive");
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("time_delay_embed: dim must be 2 or 3");
  const std::size_t need = static_cast<std::size_t>(dim - 1) * delay + 1;
  if (series.size() < need + 1)
    throw std::invalid_argument("time_delay_embed: series too short");
  const std::size_t n = series.size() - (need - 1);
  std::vector<double> times(n);
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    times[i] = static_cast<double>(i);
    for (int k = 0; k < dim; ++k)
      pts[i][k] = series[i + static_cast<std::size_t>(k) * delay];
  }
  return Trajectory(std::move(times), std::move(pts), dim, std::move(id));
}

}  // namespace tred
