#pragma once

#include <cstdint>
#include <vector>

#include "gridconvex/geometry.hpp"

namespace gridconvex {

/// Sparse random projection: every entry is sqrt(3) * {+1, 0, -1} with
/// probabilities {1/6, 2/3, 1/6}, and the whole matrix is scaled by
/// 1/sqrt(p_out). Signs are stored as int8; scale() = sqrt(3 / p_out).
class ProjectionMatrix {
 public:
  ProjectionMatrix(std::size_t p_in, std::size_t p_out, std::uint64_t seed);

  std::size_t input_dims() const { return p_in_; }
  std::size_t output_dims() const { return p_out_; }
  std::uint64_t seed() const { return seed_; }
  double scale() const { return scale_; }
  /// Sign of entry (row, col) in {-1, 0, +1}.
  int sign(std::size_t row, std::size_t col) const { return signs_[row * p_in_ + col]; }

  std::vector<double> apply(PointView x) const;

 private:
  std::size_t p_in_;
  std::size_t p_out_;
  std::uint64_t seed_;
  double scale_;
  std::vector<std::int8_t> signs_;  // p_out rows of p_in
};

/// Maps every point through a fresh ProjectionMatrix(p_in, p_out, seed).
/// With identity_bypass set and p_out == p_in the input is returned as is.
Cluster random_project(const Cluster& cluster, std::size_t p_out, std::uint64_t seed,
                       bool identity_bypass = false);

/// Uniform sample without replacement of round(rate * n) points (at least
/// one), kept in input order.
Cluster subsample_cluster(const Cluster& cluster, double rate, std::uint64_t seed);

}  // namespace gridconvex
