#include "gridconvex/convexity.hpp"

#include <cmath>

#include "gridconvex/error.hpp"
#include "gridconvex/random.hpp"

namespace gridconvex {

std::string to_string(ScanMode mode) {
  return mode == ScanMode::first_witness ? "first" : "exhaustive";
}

std::string to_string(Evidence evidence) {
  return evidence == Evidence::ok ? "ok" : "insufficient_grid_evidence";
}

ScanMode parse_scan_mode(const std::string& text) {
  if (text == "first") return ScanMode::first_witness;
  if (text == "exhaustive") return ScanMode::exhaustive;
  throw ParameterError("unknown scan mode '" + text + "' (expected first or exhaustive)");
}

MidpointResult midpoint_test(const Cluster& cluster, const MarginalSet& marginal, const SpatialIndex& index,
                             double eps, ScanMode mode) {
  if (index.cell_size() != eps) throw ParameterError("midpoint test eps differs from the index cell size");
  if (index.dims() != cluster.dims()) throw ContractViolation("index and cluster disagree on dimensionality");

  MidpointResult result;
  const auto ids = marginal.ids();
  for (PointId id : ids) {
    if (id >= cluster.size()) throw ContractViolation("marginal set references a point outside the cluster");
  }
  if (ids.size() < 2) {
    result.evidence = Evidence::insufficient_grid_evidence;
    return result;
  }

  std::vector<double> gamma(cluster.dims());
  for (std::size_t a = 0; a + 1 < ids.size(); ++a) {
    const auto pj = cluster.point(ids[a]);
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const auto pk = cluster.point(ids[b]);
      for (std::size_t d = 0; d < gamma.size(); ++d) gamma[d] = 0.5 * (pj[d] + pk[d]);
      ++result.pairs_tested;
      if (index.any_within(gamma, eps)) continue;

      ++result.violations;
      if (result.omega) {
        result.omega = false;
        result.witness = Point(gamma);
        result.witness_pair = {ids[a], ids[b]};
      }
      if (mode == ScanMode::first_witness) return result;
    }
  }
  return result;
}

AnalysisReport analyze(const Cluster& cluster, double eps, double eta, std::uint64_t seed, ScanMode mode) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive and finite");
  if (!(eta > 0.0 && eta <= 1.0)) throw ParameterError("eta must lie in (0, 1]");

  GridSpec spec = build_spec(cluster, eps);
  SampledGrid sampled = sample(spec, eta, seed);
  const SpatialIndex index(cluster, eps);
  NonNeighboringSet nonneigh = detect_non_neighboring(cluster, sampled, index);
  MarginalSet marginal = detect_marginal(cluster, nonneigh, spec, index);
  MidpointResult mid = midpoint_test(cluster, marginal, index, eps, mode);

  AnalysisReport report{
      .omega = mid.omega,
      .witness = std::move(mid.witness),
      .witness_pair = mid.witness_pair,
      .evidence = mid.evidence,
      .params = {eps, eta, seed, mode, std::string(kEngineName)},
      .counts = {},
      .grid = spec,
      .sampled = std::move(sampled.members),
      .non_neighboring = std::move(nonneigh),
      .marginal = std::move(marginal),
      .warnings = {},
  };
  if (report.non_neighboring.members.empty()) report.evidence = Evidence::insufficient_grid_evidence;

  auto& c = report.counts;
  c.lattice_points = spec.total();
  c.sampled = report.sampled.size();
  c.non_neighboring = report.non_neighboring.members.size();
  c.probe_points = report.marginal.probe_points.size();
  c.marginal = report.marginal.members.size();
  c.pairs_tested = mid.pairs_tested;
  c.violations = mid.violations;
  return report;
}

}  // namespace gridconvex
