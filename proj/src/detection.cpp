#include "gridconvex/detection.hpp"

#include <algorithm>
#include <map>

#include "gridconvex/error.hpp"

namespace gridconvex {
namespace {

void check_consistent(const Cluster& cluster, const GridSpec& spec, const SpatialIndex& index) {
  if (index.cell_size() != spec.eps()) throw ContractViolation("spatial index and grid disagree on eps");
  if (cluster.dims() != spec.dims() || index.dims() != spec.dims()) {
    throw ContractViolation("cluster, grid and index disagree on dimensionality");
  }
  if (index.size() != cluster.size()) throw ContractViolation("spatial index was built over a different cluster");
}

}  // namespace

std::vector<PointId> MarginalSet::ids() const {
  std::vector<PointId> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.id);
  return out;
}

NonNeighboringSet detect_non_neighboring(const Cluster& cluster, const SampledGrid& sampled,
                                         const SpatialIndex& index) {
  check_consistent(cluster, sampled.spec, index);
  const double eps = sampled.spec.eps();
  NonNeighboringSet out;
  std::vector<double> g(sampled.spec.dims());
  for (LatticeId id : sampled.members) {
    sampled.spec.coords_of(id, g);
    if (!index.any_within(g, eps)) out.members.push_back(id);
  }
  return out;
}

MarginalSet detect_marginal(const Cluster& cluster, const NonNeighboringSet& nonneigh,
                            const GridSpec& spec, const SpatialIndex& index) {
  check_consistent(cluster, spec, index);
  if (!std::is_sorted(nonneigh.members.begin(), nonneigh.members.end())) {
    throw ContractViolation("non-neighbouring set must be sorted");
  }
  MarginalSet out;

  std::vector<LatticeId> probes;
  probes.reserve(nonneigh.members.size() * 2 * spec.dims());
  for (LatticeId h : nonneigh.members) spec.neighbor_ids(h, probes);
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  std::set_difference(probes.begin(), probes.end(), nonneigh.members.begin(), nonneigh.members.end(),
                      std::back_inserter(out.probe_points));

  std::map<PointId, std::vector<LatticeId>> selected;
  std::vector<double> coords(spec.dims());
  for (LatticeId probe : out.probe_points) {
    spec.coords_of(probe, coords);
    if (auto nearest = index.nearest_within(coords, spec.eps())) selected[nearest->id].push_back(probe);
  }
  out.members.reserve(selected.size());
  for (auto& [id, by] : selected) out.members.push_back({id, std::move(by)});
  return out;
}

}  // namespace gridconvex
