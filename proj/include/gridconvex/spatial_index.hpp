#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gridconvex/geometry.hpp"

namespace gridconvex {

struct Neighbor {
  PointId id;
  double distance;
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Uniform hash grid over a cluster with cell side eps. A query only visits
/// the cells overlapping [q - eps, q + eps] per axis (3^p cells, occasionally
/// one more along an axis when q sits within rounding distance of a cell
/// face), which always contain every point within eps of q.
///
/// The index keeps its own copy of the coordinates grouped by cell.
class SpatialIndex {
 public:
  SpatialIndex(const Cluster& cluster, double eps);

  double cell_size() const { return eps_; }
  std::size_t dims() const { return dims_; }
  std::size_t size() const { return ids_.size(); }
  std::size_t bucket_count() const { return buckets_.size(); }

  /// Cell coordinates floor(coord / eps) of an arbitrary point.
  std::vector<std::int64_t> cell_of(PointView p) const;
  /// Ids stored in the bucket with the given cell coordinates, ascending.
  std::vector<PointId> bucket(const std::vector<std::int64_t>& key) const;

  /// True iff some cluster point lies within eps of q (closed ball).
  bool any_within(PointView q, double eps) const;
  /// Nearest cluster point within eps of q; ties go to the lowest id.
  std::optional<Neighbor> nearest_within(PointView q, double eps) const;
  /// All ids within eps of q, ascending.
  std::vector<PointId> all_within(PointView q, double eps) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept;
  };
  struct Range {
    std::uint32_t begin;
    std::uint32_t end;
  };

  void check_query(PointView q, double eps) const;
  // Calls fn(slot) for every stored slot in the cells overlapping q's
  // eps-window; fn returns false to stop early.
  template <typename Fn>
  void visit_candidates(PointView q, Fn&& fn) const;

  std::size_t dims_;
  double eps_;
  std::vector<double> coords_;  // row-major, grouped by cell
  std::vector<PointId> ids_;    // original id of each stored row
  std::vector<std::int64_t> key_min_;
  std::vector<std::int64_t> key_max_;
  std::unordered_map<std::vector<std::int64_t>, Range, KeyHash> buckets_;
};

}  // namespace gridconvex
