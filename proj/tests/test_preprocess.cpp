#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "gridconvex/convexity.hpp"
#include "gridconvex/datagen.hpp"
#include "gridconvex/epsilon_select.hpp"
#include "gridconvex/error.hpp"
#include "gridconvex/preprocess.hpp"

using namespace gridconvex;

namespace {

double ulp(double x) { return std::nextafter(std::fabs(x), INFINITY) - std::fabs(x); }

Cluster gaussian_cloud(std::size_t n, std::size_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> flat(n * p);
  for (auto& v : flat) v = g(rng);
  return Cluster(p, flat);
}

}  // namespace

TEST_CASE("projection matrix entries follow the sparse sign scheme") {
  const ProjectionMatrix m(60, 20, 5);
  CHECK(m.scale() == doctest::Approx(std::sqrt(3.0 / 20.0)));
  std::size_t plus = 0, minus = 0, zero = 0;
  for (std::size_t r = 0; r < 20; ++r) {
    for (std::size_t c = 0; c < 60; ++c) {
      const int s = m.sign(r, c);
      plus += s == 1;
      minus += s == -1;
      zero += s == 0;
    }
  }
  CHECK(plus + minus + zero == 1200);
  // expected 200 / 200 / 800; 4-sigma bands
  CHECK(plus > 150);
  CHECK(plus < 250);
  CHECK(minus > 150);
  CHECK(minus < 250);
  CHECK(zero > 735);
  CHECK(zero < 865);

  const ProjectionMatrix again(60, 20, 5);
  for (std::size_t r = 0; r < 20; ++r) {
    for (std::size_t c = 0; c < 60; ++c) CHECK(again.sign(r, c) == m.sign(r, c));
  }
}

TEST_CASE("random_project edge cases") {
  const Cluster c = gaussian_cloud(10, 4, 1);
  CHECK(random_project(c, 4, 9, true).flat() == c.flat());
  const Cluster zero(5, std::vector<double>(5, 0.0));
  CHECK(random_project(zero, 2, 3).flat() == std::vector<double>{0.0, 0.0});
  CHECK_THROWS_AS(random_project(c, 0, 1), ParameterError);
  CHECK_THROWS_AS(random_project(c, 5, 1), ParameterError);
  CHECK(random_project(c, 2, 1).dims() == 2);
  CHECK(random_project(c, 2, 1).size() == 10);
}

TEST_CASE("property: the projection is linear") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  const ProjectionMatrix m(30, 7, 11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> a(30), b(30), sum(30);
    double magnitude = 0.0;
    for (std::size_t i = 0; i < 30; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
      sum[i] = a[i] + b[i];
      magnitude += std::fabs(a[i]) + std::fabs(b[i]);
    }
    const auto pa = m.apply(a);
    const auto pb = m.apply(b);
    const auto ps = m.apply(sum);
    for (std::size_t r = 0; r < 7; ++r) {
      CHECK(std::fabs(ps[r] - (pa[r] + pb[r])) <= 8 * ulp(m.scale() * magnitude));
    }
  }
}

TEST_CASE("projection roughly preserves pairwise distances") {
  // 500 points in 50-D to 10-D; per-pair distance ratio averaged over 16
  // seeds, worst pair must stay within 0.5 of 1.
  const Cluster c = gaussian_cloud(500, 50, 2);
  const std::size_t n = c.size();
  std::vector<double> original;
  original.reserve(n * (n - 1) / 2);
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) original.push_back(distance(c.point(i), c.point(j)));
  }
  std::vector<double> ratio_sum(original.size(), 0.0);
  constexpr int kSeeds = 16;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const Cluster projected = random_project(c, 10, static_cast<std::uint64_t>(seed));
    std::size_t k = 0;
    for (PointId i = 0; i < n; ++i) {
      for (PointId j = i + 1; j < n; ++j, ++k) {
        ratio_sum[k] += distance(projected.point(i), projected.point(j)) / original[k];
      }
    }
  }
  double worst = 0.0;
  for (double s : ratio_sum) worst = std::max(worst, std::fabs(s / kSeeds - 1.0));
  CHECK(worst < 0.5);
}

TEST_CASE("subsample_cluster") {
  const Cluster c = gaussian_cloud(100, 2, 3);
  CHECK(subsample_cluster(c, 1.0, 5).flat() == c.flat());
  const Cluster half = subsample_cluster(c, 0.5, 5);
  CHECK(half.size() == 50);
  std::set<std::pair<double, double>> all;
  for (PointId i = 0; i < c.size(); ++i) all.insert({c.point(i)[0], c.point(i)[1]});
  for (PointId i = 0; i < half.size(); ++i) CHECK(all.count({half.point(i)[0], half.point(i)[1]}) == 1);
  CHECK(subsample_cluster(c, 0.5, 5).flat() == half.flat());
  CHECK(subsample_cluster(c, 0.5, 6).flat() != half.flat());
  CHECK(subsample_cluster(c, 0.001, 5).size() == 1);
  CHECK_THROWS_AS(subsample_cluster(c, 0.0, 1), ParameterError);
  CHECK_THROWS_AS(subsample_cluster(c, 1.5, 1), ParameterError);
}

TEST_CASE("subsampled ring is still found non-convex at a re-selected eps") {
  int non_convex = 0;
  constexpr int kSeeds = 10;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const auto s = static_cast<std::uint64_t>(seed);
    const Cluster half = subsample_cluster(generate(canonical_ring(s)), 0.5, s);
    const double eps = select_eps(half, default_min_pts(2));
    non_convex += !analyze(half, eps, 0.5, s).omega;
  }
  CHECK(non_convex >= 8);
}
