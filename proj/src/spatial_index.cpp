#include "gridconvex/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gridconvex/error.hpp"

namespace gridconvex {
namespace {

constexpr double kMaxCellKey = 0x1.0p62;
// Widening of the query window so a point whose computed squared distance
// ties eps^2 is never lost to rounding in the key computation.
constexpr double kWindowSlack = 1e-9;

std::int64_t key_for(double x, double eps) {
  const double k = std::floor(x / eps);
  if (!(std::fabs(k) < kMaxCellKey)) {
    throw GridTooLarge("coordinate " + std::to_string(x) + " is too far from the origin for cell size " +
                       std::to_string(eps));
  }
  return static_cast<std::int64_t>(k);
}

double squared_distance_unchecked(const double* a, PointView b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

std::size_t SpatialIndex::KeyHash::operator()(const std::vector<std::int64_t>& key) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto k : key) {
    h ^= static_cast<std::uint64_t>(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

SpatialIndex::SpatialIndex(const Cluster& cluster, double eps)
    : dims_(cluster.dims()), eps_(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive and finite");
  const std::size_t n = cluster.size();
  if (n > std::numeric_limits<std::uint32_t>::max()) throw GridTooLarge("too many points for the spatial index");

  std::vector<std::int64_t> keys(n * dims_);
  for (PointId id = 0; id < n; ++id) {
    auto p = cluster.point(id);
    for (std::size_t d = 0; d < dims_; ++d) keys[id * dims_ + d] = key_for(p[d], eps_);
  }
  std::vector<PointId> order(n);
  std::iota(order.begin(), order.end(), PointId{0});
  std::stable_sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return std::lexicographical_compare(keys.begin() + a * dims_, keys.begin() + (a + 1) * dims_,
                                        keys.begin() + b * dims_, keys.begin() + (b + 1) * dims_);
  });

  key_min_.assign(keys.begin(), keys.begin() + dims_);
  key_max_ = key_min_;
  coords_.reserve(n * dims_);
  ids_.reserve(n);
  std::vector<std::int64_t> current;
  for (std::size_t slot = 0; slot < n; ++slot) {
    const PointId id = order[slot];
    std::vector<std::int64_t> key(keys.begin() + id * dims_, keys.begin() + (id + 1) * dims_);
    for (std::size_t d = 0; d < dims_; ++d) {
      key_min_[d] = std::min(key_min_[d], key[d]);
      key_max_[d] = std::max(key_max_[d], key[d]);
    }
    if (slot == 0 || key != current) {
      current = key;
      buckets_.emplace(std::move(key), Range{static_cast<std::uint32_t>(slot), static_cast<std::uint32_t>(slot)});
    }
    ++buckets_[current].end;
    auto p = cluster.point(id);
    coords_.insert(coords_.end(), p.begin(), p.end());
    ids_.push_back(id);
  }
}

std::vector<std::int64_t> SpatialIndex::cell_of(PointView p) const {
  if (p.size() != dims_) throw ContractViolation("query dimensionality does not match the index");
  std::vector<std::int64_t> key(dims_);
  for (std::size_t d = 0; d < dims_; ++d) key[d] = key_for(p[d], eps_);
  return key;
}

std::vector<PointId> SpatialIndex::bucket(const std::vector<std::int64_t>& key) const {
  auto it = buckets_.find(key);
  if (it == buckets_.end()) return {};
  return {ids_.begin() + it->second.begin, ids_.begin() + it->second.end};
}

void SpatialIndex::check_query(PointView q, double eps) const {
  if (eps != eps_) throw ParameterError("query eps differs from the index cell size");
  if (q.size() != dims_) throw ContractViolation("query dimensionality does not match the index");
}

template <typename Fn>
void SpatialIndex::visit_candidates(PointView q, Fn&& fn) const {
  const double window = eps_ * (1.0 + kWindowSlack);
  std::vector<std::int64_t> lo(dims_), hi(dims_);
  for (std::size_t d = 0; d < dims_; ++d) {
    const double a = std::floor((q[d] - window) / eps_);
    const double b = std::floor((q[d] + window) / eps_);
    // Clamp in floating point first so far-away queries cannot overflow.
    lo[d] = static_cast<std::int64_t>(std::max(a, static_cast<double>(key_min_[d])));
    hi[d] = static_cast<std::int64_t>(std::min(b, static_cast<double>(key_max_[d])));
    if (a > static_cast<double>(key_max_[d]) || b < static_cast<double>(key_min_[d])) return;
    if (lo[d] > hi[d]) return;
  }
  std::vector<std::int64_t> key = lo;
  for (;;) {
    auto it = buckets_.find(key);
    if (it != buckets_.end()) {
      for (std::uint32_t slot = it->second.begin; slot < it->second.end; ++slot) {
        if (!fn(slot)) return;
      }
    }
    std::size_t d = 0;
    while (d < dims_ && key[d] == hi[d]) {
      key[d] = lo[d];
      ++d;
    }
    if (d == dims_) return;
    ++key[d];
  }
}

bool SpatialIndex::any_within(PointView q, double eps) const {
  check_query(q, eps);
  const double limit = eps * eps;
  bool found = false;
  visit_candidates(q, [&](std::uint32_t slot) {
    found = squared_distance_unchecked(coords_.data() + std::size_t{slot} * dims_, q) <= limit;
    return !found;
  });
  return found;
}

std::optional<Neighbor> SpatialIndex::nearest_within(PointView q, double eps) const {
  check_query(q, eps);
  const double limit = eps * eps;
  double best_d2 = 0.0;
  std::optional<PointId> best;
  visit_candidates(q, [&](std::uint32_t slot) {
    const double d2 = squared_distance_unchecked(coords_.data() + std::size_t{slot} * dims_, q);
    if (d2 <= limit) {
      const PointId id = ids_[slot];
      if (!best || d2 < best_d2 || (d2 == best_d2 && id < *best)) {
        best = id;
        best_d2 = d2;
      }
    }
    return true;
  });
  if (!best) return std::nullopt;
  return Neighbor{*best, std::sqrt(best_d2)};
}

std::vector<PointId> SpatialIndex::all_within(PointView q, double eps) const {
  check_query(q, eps);
  const double limit = eps * eps;
  std::vector<PointId> out;
  visit_candidates(q, [&](std::uint32_t slot) {
    if (squared_distance_unchecked(coords_.data() + std::size_t{slot} * dims_, q) <= limit) {
      out.push_back(ids_[slot]);
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gridconvex
