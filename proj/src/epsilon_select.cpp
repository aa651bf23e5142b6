#include "gridconvex/epsilon_select.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "gridconvex/error.hpp"
#include "gridconvex/spatial_index.hpp"

namespace gridconvex {
namespace {

constexpr std::size_t kMaxLadderRungs = 1'000'000;

// Smallest non-zero pairwise squared distance, by a sweep along the first axis.
double min_positive_squared_distance(const Cluster& cluster) {
  std::vector<PointId> order(cluster.size());
  std::iota(order.begin(), order.end(), PointId{0});
  std::sort(order.begin(), order.end(),
            [&](PointId a, PointId b) { return cluster.point(a)[0] < cluster.point(b)[0]; });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto pi = cluster.point(order[i]);
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto pj = cluster.point(order[j]);
      const double dx = pj[0] - pi[0];
      if (dx * dx > best) break;
      const double d2 = squared_distance(pi, pj);
      if (d2 > 0.0 && d2 < best) best = d2;
    }
  }
  return best;
}

}  // namespace

std::size_t DbscanResult::noise_count() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), kNoise));
}

std::size_t default_min_pts(std::size_t dims) { return 2 * dims; }

DbscanResult dbscan(const Cluster& cluster, double eps, std::size_t min_pts) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive and finite");
  if (min_pts < 1) throw ParameterError("min_pts must be at least 1");

  const SpatialIndex index(cluster, eps);
  const std::size_t n = cluster.size();
  constexpr int kUnvisited = -1;
  DbscanResult out;
  out.labels.assign(n, kUnvisited);
  out.is_core.assign(n, false);
  out.min_pts = min_pts;
  out.eps = eps;

  std::deque<PointId> frontier;
  for (PointId seed = 0; seed < n; ++seed) {
    if (out.labels[seed] != kUnvisited) continue;
    auto neighbours = index.all_within(cluster.point(seed), eps);
    if (neighbours.size() < min_pts) {
      out.labels[seed] = DbscanResult::kNoise;  // may later become a border point
      continue;
    }
    const int label = ++out.k;
    out.labels[seed] = label;
    out.is_core[seed] = true;
    frontier.assign(neighbours.begin(), neighbours.end());
    while (!frontier.empty()) {
      const PointId q = frontier.front();
      frontier.pop_front();
      if (out.labels[q] == DbscanResult::kNoise) out.labels[q] = label;
      if (out.labels[q] != kUnvisited) continue;
      out.labels[q] = label;
      auto reach = index.all_within(cluster.point(q), eps);
      if (reach.size() >= min_pts) {
        out.is_core[q] = true;
        frontier.insert(frontier.end(), reach.begin(), reach.end());
      }
    }
  }
  return out;
}

std::vector<double> eps_ladder(const Cluster& cluster, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) throw ParameterError("resolution must be positive");
  const double min_d2 = min_positive_squared_distance(cluster);
  if (!std::isfinite(min_d2)) throw NoEpsilonFound("no unique-cluster eps found: all points coincide");

  const auto lo = cluster.min_corner();
  const auto hi = cluster.max_corner();
  double diag2 = 0.0;
  for (std::size_t d = 0; d < lo.size(); ++d) diag2 += (hi[d] - lo[d]) * (hi[d] - lo[d]);
  const double top = std::sqrt(diag2);

  std::vector<double> ladder;
  for (double e = std::sqrt(min_d2); e < top; e *= 1.0 + resolution) {
    ladder.push_back(e);
    if (ladder.size() > kMaxLadderRungs) throw ParameterError("resolution too fine: the eps ladder is too long");
  }
  ladder.push_back(std::max(top, std::sqrt(min_d2)));
  return ladder;
}

double select_eps(const Cluster& cluster, std::size_t min_pts, double resolution) {
  if (min_pts < 1) throw ParameterError("min_pts must be at least 1");
  if (cluster.size() < min_pts) {
    throw ParameterError("cluster has " + std::to_string(cluster.size()) + " points, fewer than min_pts=" +
                         std::to_string(min_pts));
  }
  for (double eps : eps_ladder(cluster, resolution)) {
    const auto result = dbscan(cluster, eps, min_pts);
    if (result.k == 1 && result.noise_count() == 0) return eps;
  }
  throw NoEpsilonFound("no unique-cluster eps found on the ladder up to the bounding-box diagonal");
}

}  // namespace gridconvex
