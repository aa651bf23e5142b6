#include "gridconvex/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "gridconvex/convexity.hpp"
#include "gridconvex/datagen.hpp"
#include "gridconvex/epsilon_select.hpp"
#include "gridconvex/error.hpp"
#include "gridconvex/io.hpp"
#include "gridconvex/preprocess.hpp"

namespace gridconvex::cli {
namespace {

// Flag validation failure; the message names the flag.
struct UsageError : Error {
  using Error::Error;
};

struct AnalyzeOptions {
  std::string input;
  std::optional<double> eps;
  bool auto_eps = false;
  std::optional<std::size_t> min_pts;
  double resolution = 0.02;
  double eta = 1.0;
  std::uint64_t seed = 0;
  std::string mode = "first";
  std::optional<std::size_t> project_dims;
  std::optional<double> subsample;
  std::string out;
  std::string svg;
};

struct GenerateOptions {
  std::string shape;
  std::string config;
  std::optional<std::vector<double>> center;
  std::optional<double> r_inner;
  std::optional<double> r_outer;
  std::optional<double> radius;
  std::optional<std::vector<double>> cutter_center;
  std::optional<double> cutter_radius;
  std::optional<std::vector<double>> lower;
  std::optional<std::vector<double>> upper;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct SelectOptions {
  std::string input;
  std::optional<std::size_t> min_pts;
  double resolution = 0.02;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
  if (!f) throw ParseError("failed writing " + path);
}

std::size_t checked_min_pts(const std::optional<std::size_t>& flag, std::size_t dims) {
  if (!flag) return default_min_pts(dims);
  if (*flag < 1) throw UsageError("--min-pts must be at least 1");
  return *flag;
}

void check_resolution(double resolution) {
  if (!(resolution > 0.0)) throw UsageError("--resolution must be positive");
}

int run_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  if (o.eps && o.auto_eps) throw UsageError("--eps and --auto-eps are mutually exclusive");
  if (!o.eps && !o.auto_eps) throw UsageError("analyze needs --eps <value> or --auto-eps");
  if (o.eps && !(*o.eps > 0.0)) throw UsageError("--eps must be positive");
  if (!(o.eta > 0.0 && o.eta <= 1.0)) throw UsageError("--eta must lie in (0, 1]");
  if (o.subsample && !(*o.subsample > 0.0 && *o.subsample <= 1.0)) {
    throw UsageError("--subsample must lie in (0, 1]");
  }
  check_resolution(o.resolution);
  const ScanMode mode = [&] {
    try {
      return parse_scan_mode(o.mode);
    } catch (const ParameterError&) {
      throw UsageError("--mode must be 'first' or 'exhaustive'");
    }
  }();

  Cluster cluster = read_points(o.input);
  std::vector<std::string> warnings;
  if (o.subsample && *o.subsample < 1.0) {
    const std::size_t before = cluster.size();
    cluster = subsample_cluster(cluster, *o.subsample, o.seed);
    warnings.push_back("cluster subsampled from " + std::to_string(before) + " to " +
                       std::to_string(cluster.size()) +
                       " points; an over-sparse cluster gives unreliable convexity verdicts");
  }
  if (o.project_dims) {
    if (*o.project_dims < 1 || *o.project_dims > cluster.dims()) {
      throw UsageError("--project-dims must lie in [1, " + std::to_string(cluster.dims()) + "]");
    }
    if (*o.project_dims != cluster.dims()) {
      warnings.push_back("points randomly projected from " + std::to_string(cluster.dims()) + " to " +
                         std::to_string(*o.project_dims) + " dimensions; witness coordinates are projected");
      cluster = random_project(cluster, *o.project_dims, o.seed);
    }
  }

  double eps = o.eps.value_or(0.0);
  if (o.auto_eps) eps = select_eps(cluster, checked_min_pts(o.min_pts, cluster.dims()), o.resolution);

  AnalysisReport report = analyze(cluster, eps, o.eta, o.seed, mode);
  report.warnings = std::move(warnings);
  write_text(o.out, report_to_json(report));
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';

  if (!o.svg.empty()) {
    if (cluster.dims() == 2) {
      write_text(o.svg, report_to_svg(cluster, report));
    } else {
      err << "notice: no figure written, figures need 2-D points (p=" << cluster.dims() << ")\n";
    }
  }
  out << (report.omega ? "convex" : "non-convex") << " (evidence: " << to_string(report.evidence) << ")\n";
  return kOk;
}

int run_generate(const GenerateOptions& o, std::ostream& out) {
  ShapeSpec spec;
  if (!o.config.empty()) {
    spec = read_shape_config(o.config);
    if (!o.shape.empty() && parse_shape_kind(o.shape) != spec.kind) {
      throw UsageError("--shape disagrees with the kind in --config");
    }
  } else if (!o.shape.empty()) {
    const ShapeKind kind = [&] {
      try {
        return parse_shape_kind(o.shape);
      } catch (const GeometryError& e) {
        throw UsageError(std::string("--shape: ") + e.what());
      }
    }();
    switch (kind) {
      case ShapeKind::ring: spec = canonical_ring(); break;
      case ShapeKind::crescent: spec = canonical_crescent(); break;
      case ShapeKind::disk:
        spec.kind = ShapeKind::disk;
        spec.radius = 1.0;
        spec.n = 1000;
        break;
      case ShapeKind::rectangle:
        spec.kind = ShapeKind::rectangle;
        spec.upper = {1.0, 1.0};
        spec.n = 1000;
        break;
    }
  } else {
    throw UsageError("generate needs --shape or --config");
  }
  if (o.center) spec.center = *o.center;
  if (o.r_inner) spec.r_inner = *o.r_inner;
  if (o.r_outer) spec.r_outer = *o.r_outer;
  if (o.radius) spec.radius = *o.radius;
  if (o.cutter_center) spec.cutter_center = *o.cutter_center;
  if (o.cutter_radius) spec.cutter_radius = *o.cutter_radius;
  if (o.lower) spec.lower = *o.lower;
  if (o.upper) spec.upper = *o.upper;
  if (o.n) spec.n = *o.n;
  if (o.seed) spec.seed = *o.seed;

  const Cluster cluster = generate(spec);
  write_points(std::filesystem::path(o.out), cluster, spec.describe());
  out << spec.describe() << '\n';
  return kOk;
}

int run_select(const SelectOptions& o, std::ostream& out) {
  check_resolution(o.resolution);
  const Cluster cluster = read_points(o.input);
  const double eps = select_eps(cluster, checked_min_pts(o.min_pts, cluster.dims()), o.resolution);
  out << format_double(eps) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grid-based convexity analysis of a density-based cluster", "gridconvex"};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide whether the cluster in a point file is convex");
  analyze_cmd->add_option("--input", ao.input, "Point file (CSV)")->required();
  analyze_cmd->add_option("--eps", ao.eps, "Grid accuracy / neighbourhood radius");
  analyze_cmd->add_flag("--auto-eps", ao.auto_eps, "Pick eps as the smallest single-cluster, noise-free DBSCAN radius");
  analyze_cmd->add_option("--min-pts", ao.min_pts, "DBSCAN density threshold for --auto-eps (default 2p)");
  analyze_cmd->add_option("--resolution", ao.resolution, "Relative step of the --auto-eps ladder")
      ->capture_default_str();
  analyze_cmd->add_option("--eta", ao.eta, "Grid sampling rate in (0, 1]")->capture_default_str();
  analyze_cmd->add_option("--seed", ao.seed, "Seed for every random draw")->capture_default_str();
  analyze_cmd->add_option("--mode", ao.mode, "first | exhaustive")->capture_default_str();
  analyze_cmd->add_option("--project-dims", ao.project_dims, "Random-project the points to this many dimensions");
  analyze_cmd->add_option("--subsample", ao.subsample, "Keep this fraction of the points");
  analyze_cmd->add_option("--out", ao.out, "JSON report path")->required();
  analyze_cmd->add_option("--svg", ao.svg, "Figure path (2-D only)");

  GenerateOptions go;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic uniformly sampled shape");
  generate_cmd->add_option("--shape", go.shape, "ring | crescent | disk | rectangle");
  generate_cmd->add_option("--config", go.config, "JSON shape config (see configs/)");
  generate_cmd->add_option("--center", go.center, "Shape center x y")->expected(2)->delimiter(',');
  generate_cmd->add_option("--r-inner", go.r_inner, "Ring inner radius");
  generate_cmd->add_option("--r-outer", go.r_outer, "Ring outer radius");
  generate_cmd->add_option("--radius", go.radius, "Disk radius (crescent: the outer disk)");
  generate_cmd->add_option("--cutter-center", go.cutter_center, "Crescent cutter center x y")
      ->expected(2)
      ->delimiter(',');
  generate_cmd->add_option("--cutter-radius", go.cutter_radius, "Crescent cutter radius");
  generate_cmd->add_option("--lower", go.lower, "Rectangle lower corner x y")->expected(2)->delimiter(',');
  generate_cmd->add_option("--upper", go.upper, "Rectangle upper corner x y")->expected(2)->delimiter(',');
  generate_cmd->add_option("--n", go.n, "Number of points");
  generate_cmd->add_option("--seed", go.seed, "Generator seed");
  generate_cmd->add_option("--out", go.out, "Output point file")->required();

  SelectOptions so;
  auto* select_cmd = app.add_subcommand("select-eps", "Print the smallest single-cluster, noise-free DBSCAN radius");
  select_cmd->add_option("--input", so.input, "Point file (CSV)")->required();
  select_cmd->add_option("--min-pts", so.min_pts, "DBSCAN density threshold (default 2p)");
  select_cmd->add_option("--resolution", so.resolution, "Relative step of the radius ladder")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(ao, out, err);
    if (generate_cmd->parsed()) return run_generate(go, out);
    return run_select(so, out);
  } catch (const GridTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kGridTooLarge;
  } catch (const NoEpsilonFound& e) {
    err << "error: " << e.what() << '\n';
    return kNoEpsilon;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace gridconvex::cli
