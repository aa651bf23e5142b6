// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridconvex/convexity.hpp"
#include "gridconvex/datagen.hpp"
#include "gridconvex/epsilon_select.hpp"
#include "gridconvex/grid.hpp"
#include "gridconvex/io.hpp"
#include "support/brute_force.hpp"

using namespace gridconvex;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double ulp(double x) { return std::nextafter(std::fabs(x), INFINITY) - std::fabs(x); }

struct Outcome {
  bool pass;
  std::string detail;
};

// Every omega=false report produced anywhere in the suite, kept for the
// brute-force witness re-check.
struct WitnessRecord {
  std::string origin;
  const Cluster* cluster;
  double eps;
  std::vector<double> psi;
  std::pair<PointId, PointId> pair;
  std::vector<PointId> marginal;
};
std::vector<WitnessRecord> witnesses;
std::vector<std::unique_ptr<Cluster>> kept_clusters;

const Cluster& keep(Cluster c) {
  kept_clusters.push_back(std::make_unique<Cluster>(std::move(c)));
  return *kept_clusters.back();
}

AnalysisReport run(const std::string& origin, const Cluster& c, double eps, double eta, std::uint64_t seed,
                   ScanMode mode = ScanMode::first_witness) {
  AnalysisReport r = analyze(c, eps, eta, seed, mode);
  if (!r.omega && r.witness) {
    witnesses.push_back({origin, &c, eps, r.witness->coords(), *r.witness_pair, r.marginal.ids()});
  }
  return r;
}

std::string fraction(int hits, int total) { return std::to_string(hits) + "/" + std::to_string(total); }

std::string fixed(double v, int digits = 2) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

Outcome ac1_ring() {
  std::vector<const Cluster*> rings;
  for (std::uint64_t seed = 0; seed < 20; ++seed) rings.push_back(&keep(generate(canonical_ring(seed))));
  const auto start = Clock::now();
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = run("AC1", *rings[seed], 0.05, 0.5, seed);
    if (!r.omega && r.witness && oracle::min_distance(*rings[seed], r.witness->coords()) > 0.05) ++hits;
  }
  const double elapsed = seconds_since(start);
  return {hits >= 19 && elapsed < 5.0,
          "omega=false with valid witness in " + fraction(hits, 20) + " seeds (need >=19), " + fixed(elapsed) +
              " s (need <5)"};
}

Outcome ac3_crescent() {
  int fine_more = 0, mid_false = 0, coarse_true = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cluster& c = keep(generate(canonical_crescent(seed)));
    const auto fine = run("AC3", c, 0.005, 0.5, seed);
    const auto mid = run("AC3", c, 0.05, 0.5, seed);
    const auto coarse = run("AC3", c, 0.2, 0.5, seed);
    fine_more += fine.marginal.members.size() > 3 * mid.marginal.members.size();
    mid_false += !mid.omega;
    coarse_true += coarse.omega;
  }
  return {fine_more >= 18 && mid_false >= 18 && coarse_true >= 18,
          "(a) |V|(0.005) > 3|V|(0.05) in " + fraction(fine_more, 20) + ", (b) eps 0.05 omega=false in " +
              fraction(mid_false, 20) + ", (c) eps 0.2 omega=true in " + fraction(coarse_true, 20) +
              " (need >=18 each)"};
}

Outcome ac4_sampling() {
  int at005 = 0, at01 = 0, at05 = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cluster& c = keep(generate(canonical_ring(seed)));
    at005 += !run("AC4", c, 0.05, 0.05, seed).omega;
    at01 += !run("AC4", c, 0.05, 0.1, seed).omega;
    at05 += !run("AC4", c, 0.05, 0.5, seed).omega;
  }
  return {at005 > 10 && at01 > 10 && at05 >= at005,
          "omega=false at eta 0.05: " + fraction(at005, 20) + ", eta 0.1: " + fraction(at01, 20) +
              ", eta 0.5: " + fraction(at05, 20) + " (need majorities and rate(0.5) >= rate(0.05))"};
}

Cluster random_instance(std::mt19937_64& rng, int trial) {
  std::uniform_int_distribution<int> count(2, 200);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = count(rng);
  std::vector<double> flat;
  flat.reserve(2 * n);
  switch (trial % 3) {
    case 0:  // uniform box
      for (int i = 0; i < n; ++i) flat.insert(flat.end(), {unit(rng), unit(rng)});
      break;
    case 1:  // annulus
      while (static_cast<int>(flat.size()) < 2 * n) {
        const double x = 2 * unit(rng) - 1, y = 2 * unit(rng) - 1;
        const double r2 = x * x + y * y;
        if (r2 >= 0.25 && r2 <= 1.0) flat.insert(flat.end(), {x, y});
      }
      break;
    default:  // two blobs
      for (int i = 0; i < n; ++i) {
        const double cx = i % 2 ? 0.0 : 0.7;
        flat.insert(flat.end(), {cx + 0.3 * unit(rng), 0.3 * unit(rng)});
      }
      break;
  }
  return Cluster(2, flat);
}

Outcome ac5_oracle() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> eps_dist(0.05, 0.2);
  const auto start = Clock::now();
  int equal = 0, non_convex = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Cluster& c = keep(random_instance(rng, trial));
    const double eps = eps_dist(rng);
    const auto r = run("AC5", c, eps, 1.0, static_cast<std::uint64_t>(trial));

    const auto t = oracle::non_neighboring(c, r.grid, r.sampled);
    const auto m = oracle::marginal(c, r.grid, t);
    const auto mid = oracle::midpoint(c, m.points, eps);

    const std::set<LatticeId> got_t(r.non_neighboring.members.begin(), r.non_neighboring.members.end());
    const auto ids = r.marginal.ids();
    const std::set<PointId> got_v(ids.begin(), ids.end());
    const std::set<LatticeId> got_u(r.marginal.probe_points.begin(), r.marginal.probe_points.end());
    bool same = got_t == t && got_u == m.probes && got_v == m.points && r.omega == mid.omega &&
                r.witness.has_value() == mid.witness.has_value();
    if (same && r.witness) same = r.witness->coords() == *mid.witness && *r.witness_pair == *mid.pair;
    equal += same;
    non_convex += !mid.omega;
  }
  const double elapsed = seconds_since(start);
  return {equal == 50 && elapsed < 60.0,
          "identical (T, U, V, omega, psi) in " + fraction(equal, 50) + " instances (" + std::to_string(non_convex) +
              " non-convex), " + fixed(elapsed) + " s (need <60)"};
}

Outcome ac6_lattice() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> origin_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> eps_dist(1e-3, 2.0);
  std::uniform_int_distribution<int> dims_dist(1, 4);
  int degree_ok = 0, distance_ok = 0, checked_distances = 0;
  for (int k = 0; k < 10000; ++k) {
    const std::size_t p = static_cast<std::size_t>(dims_dist(rng));
    std::vector<double> origin(p);
    for (auto& o : origin) o = origin_dist(rng);
    const GridSpec spec(origin, eps_dist(rng), std::vector<std::int64_t>(p, 40));
    LatticeIndex g{std::vector<std::int64_t>(p)};
    std::uniform_int_distribution<std::int64_t> interior(1, 38);
    for (auto& i : g.idx) i = interior(rng);
    const auto nbrs = spec.neighbors(g);
    degree_ok += nbrs.size() == 2 * p;
    const Point a = spec.to_point(g);
    for (const auto& h : nbrs) {
      const Point b = spec.to_point(h);
      double scale = 0.0;
      for (std::size_t i = 0; i < p; ++i) scale = std::max({scale, std::fabs(a[i]), std::fabs(b[i])});
      ++checked_distances;
      distance_ok += std::fabs(distance(a, b) - spec.eps()) <= 2 * ulp(scale);
    }
  }

  bool symmetric = true;
  for (std::size_t p = 1; p <= 3; ++p) {
    const GridSpec spec(std::vector<double>(p, -1.0), 0.1, std::vector<std::int64_t>(p, 20));
    std::vector<LatticeId> out, back;
    for (LatticeId id = 0; id < spec.total(); ++id) {
      out.clear();
      spec.neighbor_ids(id, out);
      for (LatticeId h : out) {
        back.clear();
        spec.neighbor_ids(h, back);
        if (std::count(back.begin(), back.end(), id) != 1) symmetric = false;
      }
    }
  }
  return {degree_ok == 10000 && distance_ok == checked_distances && symmetric,
          "2p neighbors at " + fraction(degree_ok, 10000) + " interior points, " + std::to_string(distance_ok) +
              "/" + std::to_string(checked_distances) + " distances within 2 ulp, symmetry on 20^p (p=1..3): " +
              (symmetric ? "holds" : "broken")};
}

Cluster lattice_fill(double spacing, double lo_x, double hi_x, double lo_y, double hi_y,
                     const std::function<bool(double, double)>& inside) {
  std::vector<double> flat;
  const auto nx = static_cast<int>(std::floor((hi_x - lo_x) / spacing + 1e-9));
  const auto ny = static_cast<int>(std::floor((hi_y - lo_y) / spacing + 1e-9));
  for (int i = 0; i <= nx; ++i) {
    for (int j = 0; j <= ny; ++j) {
      const double x = lo_x + i * spacing, y = lo_y + j * spacing;
      if (inside(x, y)) flat.insert(flat.end(), {x, y});
    }
  }
  return Cluster(2, flat);
}

Outcome ac7_convex() {
  int sound = 0, total = 0;
  std::uint64_t violations = 0;
  for (double eps : {0.05, 0.1}) {
    const double spacing = eps / 2;
    const Cluster& rect = keep(lattice_fill(spacing, 0.0, 1.0, 0.0, 0.6, [](double, double) { return true; }));
    const Cluster& disk = keep(lattice_fill(spacing, -0.5, 0.5, -0.5, 0.5,
                                            [](double x, double y) { return x * x + y * y <= 0.25; }));
    for (const Cluster* c : {&rect, &disk}) {
      const auto r = run("AC7", *c, eps, 1.0, 0, ScanMode::exhaustive);
      ++total;
      sound += r.omega && r.counts.violations == 0;
      violations += r.counts.violations;
    }
  }
  return {sound == total, "omega=true with zero violating pairs in " + fraction(sound, total) +
                              " (rectangle, disk) x (eps 0.05, 0.1) runs, " + std::to_string(violations) +
                              " violations"};
}

Outcome ac8_select() {
  const Cluster& ring = keep(generate(canonical_ring(0)));
  const std::size_t min_pts = default_min_pts(ring.dims());
  const double eps = select_eps(ring, min_pts);
  const auto check = dbscan(ring, eps, min_pts);
  const auto summary = oracle::density(ring, eps, min_pts);
  const auto r = run("AC8", ring, eps, 0.5, 0);
  const bool ok = check.k == 1 && check.noise_count() == 0 && summary.k == 1 && summary.noise == 0 && !r.omega;
  return {ok, "select_eps(min_pts=" + std::to_string(min_pts) + ") = " + format_double(eps) + ": dbscan k=" +
                  std::to_string(check.k) + " noise=" + std::to_string(check.noise_count()) +
                  ", brute-force k=" + std::to_string(summary.k) + " noise=" + std::to_string(summary.noise) +
                  ", analyze omega=" + (r.omega ? "true" : "false")};
}

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

Outcome ac9_determinism() {
  const fs::path dir = fs::temp_directory_path() / "gridconvex_acceptance";
  fs::create_directories(dir);
  write_points(dir / "ring.csv", generate(canonical_ring(5)));
  std::vector<std::string> reports;
  for (const char* name : {"a.json", "b.json"}) {
    const std::string cmd = std::string("\"") + GRIDCONVEX_CLI + "\" analyze --input \"" +
                            (dir / "ring.csv").string() + "\" --eps 0.05 --eta 0.5 --seed 11 --out \"" +
                            (dir / name).string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
    reports.push_back(slurp(dir / name));
  }
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same, "two CLI runs wrote " + std::string(same ? "byte-identical" : "different") + " reports (" +
                    std::to_string(reports[0].size()) + " bytes)"};
}

Outcome ac2_witnesses() {
  std::size_t valid = 0;
  std::string first_bad;
  for (const auto& w : witnesses) {
    const auto& c = *w.cluster;
    const auto pj = c.point(w.pair.first);
    const auto pk = c.point(w.pair.second);
    bool ok = w.pair.first != w.pair.second && oracle::witness_uncovered(c, w.psi, w.eps);
    ok = ok && std::binary_search(w.marginal.begin(), w.marginal.end(), w.pair.first) &&
         std::binary_search(w.marginal.begin(), w.marginal.end(), w.pair.second);
    for (std::size_t d = 0; d < c.dims(); ++d) ok = ok && w.psi[d] == 0.5 * (pj[d] + pk[d]);
    valid += ok;
    if (!ok && first_bad.empty()) first_bad = w.origin;
  }
  return {!witnesses.empty() && valid == witnesses.size(),
          std::to_string(valid) + "/" + std::to_string(witnesses.size()) +
              " witnesses uncovered by every cluster point and equal to a marginal-pair midpoint" +
              (first_bad.empty() ? "" : " (first failure from " + first_bad + ")")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    Outcome (*check)();
  };
  // AC2 runs last so it sees the witnesses of every other criterion.
  const std::vector<Criterion> order = {
      {"AC1", "ring non-convexity", ac1_ring},
      {"AC3", "grid-accuracy sensitivity", ac3_crescent},
      {"AC4", "sampling-rate sensitivity", ac4_sampling},
      {"AC5", "oracle equivalence", ac5_oracle},
      {"AC6", "lattice invariants", ac6_lattice},
      {"AC7", "convex soundness", ac7_convex},
      {"AC8", "eps selection", ac8_select},
      {"AC9", "determinism", ac9_determinism},
      {"AC2", "witness validity", ac2_witnesses},
  };
  std::vector<std::pair<std::string, Outcome>> results;
  for (const auto& c : order) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    results.emplace_back(std::string(c.id) + " " + c.title, o);
  }
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return std::stoi(a.first.substr(2)) < std::stoi(b.first.substr(2)); });
  int failed = 0;
  for (const auto& [name, o] : results) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << '\n';
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
