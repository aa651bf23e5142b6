#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridconvex/detection.hpp"
#include "gridconvex/geometry.hpp"
#include "gridconvex/grid.hpp"
#include "gridconvex/spatial_index.hpp"

namespace gridconvex {

enum class ScanMode {
  first_witness,  // stop at the first uncovered midpoint
  exhaustive,     // test every pair and count violations
};

enum class Evidence {
  ok,
  insufficient_grid_evidence,  // no non-neighbouring grid point, or fewer than two marginal points
};

std::string to_string(ScanMode mode);
std::string to_string(Evidence evidence);
ScanMode parse_scan_mode(const std::string& text);

struct MidpointResult {
  bool omega = true;
  std::optional<Point> witness;
  std::optional<std::pair<PointId, PointId>> witness_pair;
  std::uint64_t pairs_tested = 0;
  std::uint64_t violations = 0;  // only counted in exhaustive mode
  Evidence evidence = Evidence::ok;
};

/// Midpoint convexity over the marginal set. Pairs (j, k), j < k, are visited
/// in lexicographic id order; a pair violates convexity when its midpoint has
/// no cluster point within eps. The reported witness is always the violating
/// pair with the smallest key.
MidpointResult midpoint_test(const Cluster& cluster, const MarginalSet& marginal, const SpatialIndex& index,
                             double eps, ScanMode mode = ScanMode::first_witness);

struct AnalysisCounts {
  std::uint64_t lattice_points = 0;   // t
  std::uint64_t sampled = 0;          // |G_s|
  std::uint64_t non_neighboring = 0;  // |T|
  std::uint64_t probe_points = 0;     // |U|
  std::uint64_t marginal = 0;         // |V|
  std::uint64_t pairs_tested = 0;
  std::uint64_t violations = 0;
};

struct AnalysisParams {
  double eps = 0.0;
  double eta = 1.0;
  std::uint64_t seed = 0;
  ScanMode mode = ScanMode::first_witness;
  std::string generator;
};

/// Outcome of one convexity analysis plus the intermediate sets that produced
/// it (kept for figures and diagnostics).
struct AnalysisReport {
  bool omega = true;
  std::optional<Point> witness;
  std::optional<std::pair<PointId, PointId>> witness_pair;
  Evidence evidence = Evidence::ok;
  AnalysisParams params;
  AnalysisCounts counts;

  GridSpec grid;
  std::vector<LatticeId> sampled;
  NonNeighboringSet non_neighboring;
  MarginalSet marginal;
  std::vector<std::string> warnings;
};

/// Full pipeline: lattice construction and sampling, non-neighbouring grid
/// points, marginal cluster points, midpoint test.
AnalysisReport analyze(const Cluster& cluster, double eps, double eta, std::uint64_t seed,
                       ScanMode mode = ScanMode::first_witness);

}  // namespace gridconvex
