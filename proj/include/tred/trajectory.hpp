#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tred/geometry.hpp"

namespace tred {

// Closed parameter interval [a, b] of a trajectory.
struct ParamInterval {
  double a = 0.0;
  double b = 0.0;

  double length() const { return b - a; }
  bool operator==(const ParamInterval&) const = default;
};

struct CurvatureBound {
  double kappa_max = 0.0;  // 1/length units; 0 means straight (1/kappa = inf)
};

// Time-parameterized polyline in d dimensions. Immutable after construction;
// the constructor validates the invariants (>= 2 samples, strictly increasing
// times, finite coordinates).
class Trajectory {
 public:
  Trajectory(std::vector<double> times, std::vector<Point> points, int dim,
             std::string id = {});

  int dim() const { return dim_; }
  const std::string& id() const { return id_; }
  std::size_t size() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<Point>& points() const { return points_; }
  double t_begin() const { return times_.front(); }
  double t_end() const { return times_.back(); }
  ParamInterval domain() const { return {times_.front(), times_.back()}; }

  // Index i of the edge [times[i], times[i+1]] containing t; the last edge
  // claims t_end.
  std::size_t edge_index(double t) const;

  // Piecewise-linear position at parameter t. Throws std::domain_error when
  // t lies outside [t_begin, t_end].
  Point at(double t) const;

  // Chord-summed trace length between parameters a <= b. Stops early once the
  // accumulated length exceeds `cap` (returns a value > cap in that case).
  double trace_length(double a, double b, double cap) const;

 private:
  std::vector<double> times_;
  std::vector<Point> points_;
  int dim_ = 2;
  std::string id_;
};

// Largest Menger curvature (reciprocal circumradius) over consecutive point
// triples; exact on circular arcs. Requires >= 3 points.
CurvatureBound estimate_curvature_max(const Trajectory& traj);

// Delay embedding of a scalar series: point i is
// (s_i, s_{i+delay}, ..., s_{i+(dim-1)*delay}), times 0,1,2,...
// dim must be 2 or 3.
Trajectory time_delay_embed(const std::vector<double>& series, int delay,
                            int dim, std::string id = {});

}  // namespace tred
