#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridconvex/geometry.hpp"

namespace gridconvex {

enum class ShapeKind { ring, crescent, disk, rectangle };

std::string to_string(ShapeKind kind);
ShapeKind parse_shape_kind(const std::string& text);

/// Planar shape to sample uniformly. Only the fields of `kind` are read:
///   ring:      center, r_inner < r_outer
///   crescent:  center, radius (the disk), cutter_center, cutter_radius
///   disk:      center, radius
///   rectangle: lower, upper
struct ShapeSpec {
  ShapeKind kind = ShapeKind::disk;
  std::vector<double> center{0.0, 0.0};
  double r_inner = 0.0;
  double r_outer = 0.0;
  double radius = 0.0;
  std::vector<double> cutter_center{0.0, 0.0};
  double cutter_radius = 0.0;
  std::vector<double> lower{0.0, 0.0};
  std::vector<double> upper{0.0, 0.0};
  std::size_t n = 0;
  std::uint64_t seed = 0;

  /// Throws GeometryError for empty or degenerate shapes.
  void validate() const;
  /// Closed membership predicate (the crescent's cut is open, so points on
  /// the cutter circle belong to the crescent).
  bool contains(PointView p) const;
  /// Axis-aligned box enclosing the shape: {lower, upper}.
  std::pair<std::vector<double>, std::vector<double>> bounds() const;
  /// One-line human-readable parameter summary.
  std::string describe() const;
};

/// n points uniformly distributed over the shape, by rejection sampling from
/// its bounding box. Deterministic given spec.seed.
Cluster generate(const ShapeSpec& spec);

/// Reconstructed parameter sets used by the experiments. The original
/// figures do not publish their geometry; these are chosen to reproduce the
/// qualitative behaviour at the published eps / eta settings.
ShapeSpec canonical_ring(std::uint64_t seed = 0);
ShapeSpec canonical_crescent(std::uint64_t seed = 0);

}  // namespace gridconvex
