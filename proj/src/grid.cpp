#include "gridconvex/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "gridconvex/error.hpp"
#include "gridconvex/random.hpp"

namespace gridconvex {
namespace {

constexpr double kMaxCountPerDim = 0x1.0p62;

[[noreturn]] void throw_too_large(const std::string& what) {
  throw GridTooLarge("grid too large: " + what +
                     "; reduce the dimensionality first (random projection, --project-dims) "
                     "or coarsen eps; grid sampling (--eta) shrinks the working sample");
}

}  // namespace

GridSpec::GridSpec(std::vector<double> origin, double eps, std::vector<std::int64_t> counts)
    : origin_(std::move(origin)), eps_(eps), counts_(std::move(counts)), total_(1) {
  if (!(eps_ > 0.0) || !std::isfinite(eps_)) throw ParameterError("eps must be positive and finite");
  if (origin_.empty() || origin_.size() != counts_.size()) {
    throw ContractViolation("grid origin and counts must have the same, non-zero length");
  }
  strides_.assign(counts_.size(), 1);
  for (std::size_t i = counts_.size(); i-- > 0;) {
    if (counts_[i] < 1) throw ContractViolation("lattice counts must be positive");
    strides_[i] = total_;
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(total_, static_cast<std::uint64_t>(counts_[i]), &next)) {
      throw_too_large("lattice point count overflows 64 bits");
    }
    total_ = next;
  }
}

bool GridSpec::valid(const LatticeIndex& g) const {
  if (g.idx.size() != counts_.size()) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (g.idx[i] < 0 || g.idx[i] >= counts_[i]) return false;
  }
  return true;
}

LatticeId GridSpec::linear(const LatticeIndex& g) const {
  if (!valid(g)) throw ContractViolation("lattice index outside the grid");
  LatticeId id = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) id += static_cast<std::uint64_t>(g.idx[i]) * strides_[i];
  return id;
}

LatticeIndex GridSpec::unravel(LatticeId id) const {
  if (id >= total_) throw ContractViolation("lattice id outside the grid");
  LatticeIndex g;
  g.idx.resize(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    g.idx[i] = static_cast<std::int64_t>(id / strides_[i]);
    id %= strides_[i];
  }
  return g;
}

Point GridSpec::to_point(const LatticeIndex& g) const {
  if (!valid(g)) throw ContractViolation("lattice index outside the grid");
  std::vector<double> coords(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    coords[i] = std::fma(static_cast<double>(g.idx[i]), eps_, origin_[i]);
  }
  return Point(std::move(coords));
}

Point GridSpec::to_point(LatticeId id) const { return to_point(unravel(id)); }

void GridSpec::coords_of(LatticeId id, std::span<double> out) const {
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const auto k = id / strides_[i];
    id %= strides_[i];
    out[i] = std::fma(static_cast<double>(k), eps_, origin_[i]);
  }
}

std::vector<LatticeIndex> GridSpec::neighbors(const LatticeIndex& g) const {
  if (!valid(g)) throw ContractViolation("lattice index outside the grid");
  std::vector<LatticeIndex> out;
  out.reserve(2 * counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (g.idx[i] > 0) {
      out.push_back(g);
      --out.back().idx[i];
    }
    if (g.idx[i] + 1 < counts_[i]) {
      out.push_back(g);
      ++out.back().idx[i];
    }
  }
  return out;
}

void GridSpec::neighbor_ids(LatticeId id, std::vector<LatticeId>& out) const {
  LatticeId rest = id;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const auto k = rest / strides_[i];
    rest %= strides_[i];
    if (k > 0) out.push_back(id - strides_[i]);
    if (k + 1 < static_cast<std::uint64_t>(counts_[i])) out.push_back(id + strides_[i]);
  }
}

GridSpec build_spec(const Cluster& cluster, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("eps must be positive and finite");
  const auto lo = cluster.min_corner();
  const auto hi = cluster.max_corner();
  std::vector<double> origin(cluster.dims());
  std::vector<std::int64_t> counts(cluster.dims());
  for (std::size_t i = 0; i < cluster.dims(); ++i) {
    origin[i] = lo[i] - 2.0 * eps;
    const double steps = std::floor((hi[i] - lo[i] + 4.0 * eps) / eps);
    if (!(steps < kMaxCountPerDim)) {
      throw_too_large("dimension " + std::to_string(i) + " needs more than 2^62 lattice planes");
    }
    counts[i] = static_cast<std::int64_t>(steps) + 1;
    // The quotient can round down across an integer; the last plane must
    // still reach max + 2*eps.
    const double padded_max = hi[i] + 2.0 * eps;
    while (std::fma(static_cast<double>(counts[i] - 1), eps, origin[i]) < padded_max) ++counts[i];
  }
  return GridSpec(std::move(origin), eps, std::move(counts));
}

std::uint64_t sample_size(std::uint64_t total, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw ParameterError("eta must lie in (0, 1]");
  if (eta == 1.0) return total;
  const double target = std::round(eta * static_cast<double>(total));
  if (target < 1.0) return 1;
  return std::min(total, static_cast<std::uint64_t>(target));
}

SampledGrid sample(const GridSpec& spec, double eta, std::uint64_t seed) {
  const std::uint64_t target = sample_size(spec.total(), eta);
  if (target > kMaxSampledPoints) {
    throw_too_large(std::to_string(target) + " sampled lattice points exceed the limit of " +
                    std::to_string(kMaxSampledPoints));
  }
  SampledGrid out{spec, eta, seed, {}};
  out.members.reserve(target);
  if (target == spec.total() && eta == 1.0) {
    for (LatticeId id = 0; id < spec.total(); ++id) out.members.push_back(id);
    return out;
  }

  Engine engine(seed);
  std::unordered_set<LatticeId> seen;
  seen.reserve(target * 2);
  LatticeIndex g;
  g.idx.resize(spec.dims());
  while (out.members.size() < target) {
    for (std::size_t i = 0; i < spec.dims(); ++i) {
      g.idx[i] = static_cast<std::int64_t>(uniform_below(engine, static_cast<std::uint64_t>(spec.counts()[i])));
    }
    const LatticeId id = spec.linear(g);
    if (seen.insert(id).second) out.members.push_back(id);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace gridconvex
