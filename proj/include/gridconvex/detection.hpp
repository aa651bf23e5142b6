#pragma once

#include <vector>

#include "gridconvex/geometry.hpp"
#include "gridconvex/grid.hpp"
#include "gridconvex/spatial_index.hpp"

namespace gridconvex {

/// Sampled lattice points with no cluster point within eps.
struct NonNeighboringSet {
  std::vector<LatticeId> members;  // sorted ascending
};

/// A frontier cluster point together with every probe that selected it.
struct MarginalPoint {
  PointId id;
  std::vector<LatticeId> probes;  // sorted ascending
};

struct MarginalSet {
  std::vector<MarginalPoint> members;  // sorted by id, distinct
  /// Lattice neighbours of the non-neighbouring set, minus that set (sorted).
  std::vector<LatticeId> probe_points;

  std::vector<PointId> ids() const;
};

/// Every sampled lattice point whose eps-ball contains no cluster point.
NonNeighboringSet detect_non_neighboring(const Cluster& cluster, const SampledGrid& sampled,
                                         const SpatialIndex& index);

/// Probe points are the full-lattice neighbours of `nonneigh` that are not
/// themselves in it. Each probe with a cluster point within eps contributes
/// its nearest cluster point (lowest id on ties) to the marginal set.
MarginalSet detect_marginal(const Cluster& cluster, const NonNeighboringSet& nonneigh,
                            const GridSpec& spec, const SpatialIndex& index);

}  // namespace gridconvex
