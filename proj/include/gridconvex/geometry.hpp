#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gridconvex {

using PointView = std::span<const double>;
using PointId = std::size_t;

/// A p-dimensional point with finite coordinates.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dims() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }
  PointView view() const { return coords_; }
  operator PointView() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// The n x p object set under analysis. Points are stored row-major in one
/// contiguous buffer; a point's id is its input position.
class Cluster {
 public:
  Cluster(std::size_t dims, std::vector<double> flat);
  explicit Cluster(const std::vector<std::vector<double>>& rows);
  explicit Cluster(const std::vector<Point>& points);

  std::size_t size() const { return flat_.size() / dims_; }
  std::size_t dims() const { return dims_; }
  PointView point(PointId id) const { return {flat_.data() + id * dims_, dims_}; }
  const std::vector<double>& flat() const { return flat_; }

  /// Per-dimension minimum and maximum over all points.
  std::vector<double> min_corner() const;
  std::vector<double> max_corner() const;

 private:
  std::size_t dims_;
  std::vector<double> flat_;
};

double squared_distance(PointView a, PointView b);
double distance(PointView a, PointView b);
Point midpoint(PointView a, PointView b);

/// Closed-ball membership: distance(x, y) <= eps, decided on squared
/// distances without a tolerance.
bool in_eps_neighborhood(PointView x, PointView y, double eps);

}  // namespace gridconvex
