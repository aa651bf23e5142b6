#include "gridconvex/datagen.hpp"

#include <cmath>
#include <sstream>

#include "gridconvex/error.hpp"
#include "gridconvex/random.hpp"

namespace gridconvex {
namespace {

double sq(double x) { return x * x; }

double squared_norm_2d(PointView p, const std::vector<double>& c) {
  return sq(p[0] - c[0]) + sq(p[1] - c[1]);
}

void require_2d(const std::vector<double>& v, const char* what) {
  if (v.size() != 2 || !std::isfinite(v[0]) || !std::isfinite(v[1])) {
    throw GeometryError(std::string(what) + " must be a finite 2-D point");
  }
}

void require_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) throw GeometryError(std::string(what) + " must be positive");
}

std::string fmt_point(const std::vector<double>& p) {
  std::ostringstream os;
  os.precision(17);
  os << p[0] << ',' << p[1];
  return os.str();
}

}  // namespace

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::ring: return "ring";
    case ShapeKind::crescent: return "crescent";
    case ShapeKind::disk: return "disk";
    case ShapeKind::rectangle: return "rectangle";
  }
  return "unknown";
}

ShapeKind parse_shape_kind(const std::string& text) {
  if (text == "ring") return ShapeKind::ring;
  if (text == "crescent") return ShapeKind::crescent;
  if (text == "disk") return ShapeKind::disk;
  if (text == "rectangle") return ShapeKind::rectangle;
  throw GeometryError("unknown shape '" + text + "' (expected ring, crescent, disk or rectangle)");
}

void ShapeSpec::validate() const {
  if (n < 1) throw GeometryError("point count n must be at least 1");
  switch (kind) {
    case ShapeKind::ring:
      require_2d(center, "ring center");
      require_radius(r_inner, "ring inner radius");
      require_radius(r_outer, "ring outer radius");
      if (!(r_inner < r_outer)) throw GeometryError("ring needs r_inner < r_outer");
      break;
    case ShapeKind::crescent: {
      require_2d(center, "crescent disk center");
      require_2d(cutter_center, "crescent cutter center");
      require_radius(radius, "crescent disk radius");
      require_radius(cutter_radius, "crescent cutter radius");
      const double d = std::sqrt(squared_norm_2d(center, cutter_center));
      if (!(d < radius + cutter_radius)) throw GeometryError("crescent cutter does not overlap the disk");
      if (d + radius <= cutter_radius) throw GeometryError("crescent cutter swallows the whole disk");
      break;
    }
    case ShapeKind::disk:
      require_2d(center, "disk center");
      require_radius(radius, "disk radius");
      break;
    case ShapeKind::rectangle:
      require_2d(lower, "rectangle lower corner");
      require_2d(upper, "rectangle upper corner");
      if (!(lower[0] < upper[0] && lower[1] < upper[1])) throw GeometryError("rectangle has zero area");
      break;
  }
}

bool ShapeSpec::contains(PointView p) const {
  if (p.size() != 2) return false;
  switch (kind) {
    case ShapeKind::ring: {
      const double r2 = squared_norm_2d(p, center);
      return r2 >= sq(r_inner) && r2 <= sq(r_outer);
    }
    case ShapeKind::crescent:
      return squared_norm_2d(p, center) <= sq(radius) && squared_norm_2d(p, cutter_center) >= sq(cutter_radius);
    case ShapeKind::disk:
      return squared_norm_2d(p, center) <= sq(radius);
    case ShapeKind::rectangle:
      return p[0] >= lower[0] && p[0] <= upper[0] && p[1] >= lower[1] && p[1] <= upper[1];
  }
  return false;
}

std::pair<std::vector<double>, std::vector<double>> ShapeSpec::bounds() const {
  switch (kind) {
    case ShapeKind::ring:
      return {{center[0] - r_outer, center[1] - r_outer}, {center[0] + r_outer, center[1] + r_outer}};
    case ShapeKind::crescent:
    case ShapeKind::disk:
      return {{center[0] - radius, center[1] - radius}, {center[0] + radius, center[1] + radius}};
    case ShapeKind::rectangle:
      return {lower, upper};
  }
  return {};
}

std::string ShapeSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "shape=" << to_string(kind);
  switch (kind) {
    case ShapeKind::ring:
      os << " center=" << fmt_point(center) << " r_inner=" << r_inner << " r_outer=" << r_outer;
      break;
    case ShapeKind::crescent:
      os << " center=" << fmt_point(center) << " radius=" << radius << " cutter_center=" << fmt_point(cutter_center)
         << " cutter_radius=" << cutter_radius;
      break;
    case ShapeKind::disk:
      os << " center=" << fmt_point(center) << " radius=" << radius;
      break;
    case ShapeKind::rectangle:
      os << " lower=" << fmt_point(lower) << " upper=" << fmt_point(upper);
      break;
  }
  os << " n=" << n << " seed=" << seed << " generator=" << kEngineName;
  return os.str();
}

Cluster generate(const ShapeSpec& spec) {
  spec.validate();
  const auto [lo, hi] = spec.bounds();
  Engine engine(spec.seed);
  std::vector<double> flat;
  flat.reserve(spec.n * 2);
  const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(spec.n) + 1'000'000;
  std::uint64_t attempts = 0;
  double p[2];
  while (flat.size() < spec.n * 2) {
    if (++attempts > max_attempts) throw GeometryError("shape area is too small for rejection sampling");
    p[0] = uniform_real(engine, lo[0], hi[0]);
    p[1] = uniform_real(engine, lo[1], hi[1]);
    if (spec.contains(p)) flat.insert(flat.end(), p, p + 2);
  }
  return Cluster(2, std::move(flat));
}

ShapeSpec canonical_ring(std::uint64_t seed) {
  ShapeSpec s;
  s.kind = ShapeKind::ring;
  s.center = {0.0, 0.0};
  s.r_inner = 0.5;
  s.r_outer = 1.0;
  s.n = 2000;
  s.seed = seed;
  return s;
}

ShapeSpec canonical_crescent(std::uint64_t seed) {
  ShapeSpec s;
  s.kind = ShapeKind::crescent;
  s.center = {0.0, 0.0};
  s.radius = 1.0;
  s.cutter_center = {1.55, 0.0};
  s.cutter_radius = 0.8;
  s.n = 2400;
  s.seed = seed;
  return s;
}

}  // namespace gridconvex
