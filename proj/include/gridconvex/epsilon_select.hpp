#pragma once

#include <cstddef>
#include <vector>

#include "gridconvex/geometry.hpp"

namespace gridconvex {

struct DbscanResult {
  static constexpr int kNoise = 0;

  std::vector<int> labels;     // kNoise or a cluster number in 1..k
  std::vector<bool> is_core;
  int k = 0;
  std::size_t min_pts = 0;
  double eps = 0.0;

  std::size_t noise_count() const;
};

/// Classic DBSCAN. A point is core when at least min_pts points (itself
/// included) lie within eps. Border points join the first cluster that
/// reaches them in input order.
DbscanResult dbscan(const Cluster& cluster, double eps, std::size_t min_pts);

/// Default density threshold, 2p.
std::size_t default_min_pts(std::size_t dims);

/// Ascending radii: start at the smallest positive nearest-neighbour
/// distance, multiply by (1 + resolution) until the bounding-box diagonal is
/// reached (the last rung is the diagonal itself).
std::vector<double> eps_ladder(const Cluster& cluster, double resolution);

/// Smallest rung of eps_ladder for which dbscan reports exactly one cluster
/// and no noise. Throws NoEpsilonFound when no rung qualifies.
double select_eps(const Cluster& cluster, std::size_t min_pts, double resolution = 0.02);

}  // namespace gridconvex
