#include "gridconvex/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gridconvex/error.hpp"
#include "gridconvex/random.hpp"

namespace gridconvex {

ProjectionMatrix::ProjectionMatrix(std::size_t p_in, std::size_t p_out, std::uint64_t seed)
    : p_in_(p_in), p_out_(p_out), seed_(seed), scale_(0.0) {
  if (p_in_ < 1 || p_out_ < 1 || p_out_ > p_in_) {
    throw ParameterError("projection needs 1 <= p_out <= p_in (got p_out=" + std::to_string(p_out) +
                         ", p_in=" + std::to_string(p_in) + ")");
  }
  scale_ = std::sqrt(3.0 / static_cast<double>(p_out_));
  Engine engine(seed_);
  signs_.resize(p_in_ * p_out_);
  for (auto& s : signs_) {
    const auto u = uniform_below(engine, 6);
    s = u == 0 ? 1 : (u == 1 ? -1 : 0);
  }
}

std::vector<double> ProjectionMatrix::apply(PointView x) const {
  if (x.size() != p_in_) throw ContractViolation("projection input has the wrong dimensionality");
  std::vector<double> y(p_out_, 0.0);
  for (std::size_t r = 0; r < p_out_; ++r) {
    double acc = 0.0;
    const std::int8_t* row = signs_.data() + r * p_in_;
    for (std::size_t c = 0; c < p_in_; ++c) {
      if (row[c] > 0) acc += x[c];
      else if (row[c] < 0) acc -= x[c];
    }
    y[r] = scale_ * acc;
  }
  return y;
}

Cluster random_project(const Cluster& cluster, std::size_t p_out, std::uint64_t seed, bool identity_bypass) {
  if (identity_bypass && p_out == cluster.dims()) return cluster;
  const ProjectionMatrix matrix(cluster.dims(), p_out, seed);
  std::vector<double> flat;
  flat.reserve(cluster.size() * p_out);
  for (PointId i = 0; i < cluster.size(); ++i) {
    const auto y = matrix.apply(cluster.point(i));
    flat.insert(flat.end(), y.begin(), y.end());
  }
  return Cluster(p_out, std::move(flat));
}

Cluster subsample_cluster(const Cluster& cluster, double rate, std::uint64_t seed) {
  if (!(rate > 0.0 && rate <= 1.0)) throw ParameterError("subsample rate must lie in (0, 1]");
  const std::size_t n = cluster.size();
  if (rate == 1.0) return cluster;
  const auto keep = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::round(rate * static_cast<double>(n))), 1, n);

  // Partial Fisher-Yates over the id list.
  std::vector<PointId> ids(n);
  std::iota(ids.begin(), ids.end(), PointId{0});
  Engine engine(seed);
  for (std::size_t i = 0; i < keep; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(engine, n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(keep);
  std::sort(ids.begin(), ids.end());

  std::vector<double> flat;
  flat.reserve(keep * cluster.dims());
  for (PointId id : ids) {
    const auto p = cluster.point(id);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return Cluster(cluster.dims(), std::move(flat));
}

}  // namespace gridconvex
