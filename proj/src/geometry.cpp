#include "gridconvex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gridconvex/error.hpp"

namespace gridconvex {
namespace {

void check_finite(PointView coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) throw ContractViolation("point coordinate is not finite");
  }
}

void check_same_dims(PointView a, PointView b) {
  if (a.size() != b.size()) {
    throw ContractViolation("dimensionality mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ContractViolation("a point needs at least one coordinate");
  check_finite(coords_);
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Cluster::Cluster(std::size_t dims, std::vector<double> flat) : dims_(dims), flat_(std::move(flat)) {
  if (dims_ == 0) throw ContractViolation("cluster dimensionality must be at least 1");
  if (flat_.empty()) throw ContractViolation("cluster must contain at least one point");
  if (flat_.size() % dims_ != 0) throw ContractViolation("flat buffer is not a multiple of dims");
  check_finite(flat_);
}

Cluster::Cluster(const std::vector<std::vector<double>>& rows) : dims_(0) {
  if (rows.empty()) throw ContractViolation("cluster must contain at least one point");
  dims_ = rows.front().size();
  if (dims_ == 0) throw ContractViolation("cluster dimensionality must be at least 1");
  flat_.reserve(rows.size() * dims_);
  for (const auto& row : rows) {
    if (row.size() != dims_) throw ContractViolation("cluster points differ in dimensionality");
    flat_.insert(flat_.end(), row.begin(), row.end());
  }
  check_finite(flat_);
}

Cluster::Cluster(const std::vector<Point>& points) : dims_(0) {
  if (points.empty()) throw ContractViolation("cluster must contain at least one point");
  dims_ = points.front().dims();
  flat_.reserve(points.size() * dims_);
  for (const auto& p : points) {
    if (p.dims() != dims_) throw ContractViolation("cluster points differ in dimensionality");
    flat_.insert(flat_.end(), p.coords().begin(), p.coords().end());
  }
}

std::vector<double> Cluster::min_corner() const {
  std::vector<double> lo(point(0).begin(), point(0).end());
  for (PointId i = 1; i < size(); ++i) {
    auto p = point(i);
    for (std::size_t d = 0; d < dims_; ++d) lo[d] = std::min(lo[d], p[d]);
  }
  return lo;
}

std::vector<double> Cluster::max_corner() const {
  std::vector<double> hi(point(0).begin(), point(0).end());
  for (PointId i = 1; i < size(); ++i) {
    auto p = point(i);
    for (std::size_t d = 0; d < dims_; ++d) hi[d] = std::max(hi[d], p[d]);
  }
  return hi;
}

double squared_distance(PointView a, PointView b) {
  check_same_dims(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double distance(PointView a, PointView b) { return std::sqrt(squared_distance(a, b)); }

Point midpoint(PointView a, PointView b) {
  check_same_dims(a, b);
  std::vector<double> mid(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
  return Point(std::move(mid));
}

bool in_eps_neighborhood(PointView x, PointView y, double eps) {
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  return squared_distance(x, y) <= eps * eps;
}

}  // namespace gridconvex
