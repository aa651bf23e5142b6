#pragma once

#include <cstdint>
#include <vector>

#include "gridconvex/geometry.hpp"

namespace gridconvex {

/// Integer coordinates of a lattice point; idx[i] < counts[i].
struct LatticeIndex {
  std::vector<std::int64_t> idx;
  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
  friend auto operator<=>(const LatticeIndex&, const LatticeIndex&) = default;
};

/// Linearized lattice index: mixed radix with dimension 0 most significant, so
/// ordering by LatticeId equals lexicographic ordering of LatticeIndex.
using LatticeId = std::uint64_t;

/// Largest sampled lattice we are willing to materialize.
inline constexpr std::uint64_t kMaxSampledPoints = std::uint64_t(1) << 25;

/// Axis-aligned lattice with spacing eps covering the data extent padded by
/// 2*eps on every side.
class GridSpec {
 public:
  /// Lattice geometry from explicit parameters; validates them.
  GridSpec(std::vector<double> origin, double eps, std::vector<std::int64_t> counts);

  std::size_t dims() const { return origin_.size(); }
  const std::vector<double>& origin() const { return origin_; }
  double eps() const { return eps_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }

  bool valid(const LatticeIndex& g) const;
  LatticeId linear(const LatticeIndex& g) const;
  LatticeIndex unravel(LatticeId id) const;

  /// origin + idx * eps, coordinate-wise (single rounding per coordinate).
  Point to_point(const LatticeIndex& g) const;
  Point to_point(LatticeId id) const;
  /// Writes the coordinates of `id` into `out` (size dims()) without allocating.
  void coords_of(LatticeId id, std::span<double> out) const;

  /// Lattice neighbours at distance exactly eps: idx[i] +/- 1 per dimension,
  /// clipped to the lattice. Order: dimension-major, minus before plus.
  std::vector<LatticeIndex> neighbors(const LatticeIndex& g) const;
  /// Same set as neighbors(), in linearized form, appended to `out`.
  void neighbor_ids(LatticeId id, std::vector<LatticeId>& out) const;

 private:
  std::vector<double> origin_;
  double eps_;
  std::vector<std::int64_t> counts_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t total_;
};

/// Lattice covering `cluster` at accuracy `eps` with 2*eps padding.
/// Throws GridTooLarge when the point count is not representable.
GridSpec build_spec(const Cluster& cluster, double eps);

/// Random subset of the lattice at rate eta.
struct SampledGrid {
  GridSpec spec;
  double eta;
  std::uint64_t seed;
  std::vector<LatticeId> members;  // sorted ascending, distinct
};

/// Target sample size: round(eta * t), clamped to at least 1.
std::uint64_t sample_size(std::uint64_t total, double eta);

/// Draws round(eta*t) distinct lattice points; each draw picks every
/// dimension's index uniformly and independently, duplicates are redrawn.
/// eta == 1 enumerates the lattice without consuming randomness.
SampledGrid sample(const GridSpec& spec, double eta, std::uint64_t seed);

}  // namespace gridconvex
