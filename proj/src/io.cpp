#include "gridconvex/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gridconvex/error.hpp"

namespace gridconvex {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  char sep = 0;
  for (char c : {',', ';', '\t'}) {
    if (line.find(c) != std::string_view::npos) {
      sep = c;
      break;
    }
  }
  if (sep != 0) {
    std::size_t start = 0;
    for (;;) {
      const auto pos = line.find(sep, start);
      cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    std::size_t pos = 0;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \r", pos);
      if (pos == std::string_view::npos) break;
      const auto end = line.find_first_of(" \r", pos);
      cells.push_back(line.substr(pos, end == std::string_view::npos ? end : end - pos));
      pos = end;
    }
  }
  return cells;
}

bool parse_real(std::string_view cell, double& value) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return false;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  return ec == std::errc() && ptr == cell.data() + cell.size() && std::isfinite(value);
}

std::vector<double> read_pair(const json& j, const char* key) {
  auto v = j.at(key).get<std::vector<double>>();
  if (v.size() != 2) throw ParseError(std::string("shape field '") + key + "' must hold two numbers");
  return v;
}

std::string svg_num(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, ptr);
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

Cluster read_points(std::istream& in) {
  std::vector<double> flat;
  std::size_t dims = 0;
  bool seen_row = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto cells = split_cells(body);
    std::vector<double> row(cells.size());
    bool numeric = true;
    for (std::size_t i = 0; i < cells.size(); ++i) numeric = numeric && parse_real(cells[i], row[i]);
    if (!numeric) {
      if (!seen_row) {
        seen_row = true;  // header
        dims = cells.size();
        continue;
      }
      throw ParseError("line " + std::to_string(line_no) + ": cell is not a finite number");
    }
    if (dims == 0) dims = row.size();
    if (row.size() != dims) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dims) + " columns, got " +
                       std::to_string(row.size()));
    }
    seen_row = true;
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (flat.empty()) throw ParseError("point file contains no data rows");
  return Cluster(dims, std::move(flat));
}

Cluster read_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file " + path.string());
  return read_points(in);
}

void write_points(std::ostream& out, const Cluster& cluster, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (std::size_t d = 0; d < cluster.dims(); ++d) out << (d ? "," : "") << 'x' << d;
  out << '\n';
  for (PointId i = 0; i < cluster.size(); ++i) {
    const auto p = cluster.point(i);
    for (std::size_t d = 0; d < p.size(); ++d) out << (d ? "," : "") << format_double(p[d]);
    out << '\n';
  }
}

void write_points(const std::filesystem::path& path, const Cluster& cluster, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write point file " + path.string());
  write_points(out, cluster, comment);
}

std::string report_to_json(const AnalysisReport& report) {
  json j;
  j["omega"] = report.omega;
  j["witness"] = report.witness ? json(report.witness->coords()) : json(nullptr);
  j["witness_pair"] = report.witness_pair ? json::array({report.witness_pair->first, report.witness_pair->second})
                                          : json(nullptr);
  j["eps"] = report.params.eps;
  j["eta"] = report.params.eta;
  j["seed"] = report.params.seed;
  j["mode"] = to_string(report.params.mode);
  j["generator"] = report.params.generator;
  j["evidence"] = to_string(report.evidence);
  json counts{
      {"t", report.counts.lattice_points},
      {"sampled", report.counts.sampled},
      {"non_neighboring", report.counts.non_neighboring},
      {"probe_points", report.counts.probe_points},
      {"marginal", report.counts.marginal},
      {"pairs_tested", report.counts.pairs_tested},
  };
  if (report.params.mode == ScanMode::exhaustive) counts["violations"] = report.counts.violations;
  j["counts"] = std::move(counts);
  j["marginal_ids"] = report.marginal.ids();
  j["warnings"] = report.warnings;
  j["version"] = std::string(kVersion);
  return j.dump() + "\n";
}

ShapeSpec shape_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ShapeSpec s;
    s.kind = parse_shape_kind(j.at("kind").get<std::string>());
    s.n = j.at("n").get<std::size_t>();
    s.seed = j.value("seed", std::uint64_t{0});
    switch (s.kind) {
      case ShapeKind::ring:
        s.center = read_pair(j, "center");
        s.r_inner = j.at("r_inner").get<double>();
        s.r_outer = j.at("r_outer").get<double>();
        break;
      case ShapeKind::crescent:
        s.center = read_pair(j, "center");
        s.radius = j.at("radius").get<double>();
        s.cutter_center = read_pair(j, "cutter_center");
        s.cutter_radius = j.at("cutter_radius").get<double>();
        break;
      case ShapeKind::disk:
        s.center = read_pair(j, "center");
        s.radius = j.at("radius").get<double>();
        break;
      case ShapeKind::rectangle:
        s.lower = read_pair(j, "lower");
        s.upper = read_pair(j, "upper");
        break;
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid shape config: ") + e.what());
  }
}

ShapeSpec read_shape_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open shape config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return shape_from_json(ss.str());
}

std::string report_to_svg(const Cluster& cluster, const AnalysisReport& report) {
  if (cluster.dims() != 2) throw ContractViolation("figures are only drawn for 2-D clusters");
  const GridSpec& grid = report.grid;
  const double eps = grid.eps();
  const double x0 = grid.origin()[0];
  const double y0 = grid.origin()[1];
  const double x1 = x0 + static_cast<double>(grid.counts()[0] - 1) * eps;
  const double y1 = y0 + static_cast<double>(grid.counts()[1] - 1) * eps;
  constexpr double kPlot = 800.0;
  constexpr double kMargin = 20.0;
  constexpr double kLegend = 230.0;
  const double scale = kPlot / std::max(x1 - x0, y1 - y0);
  const auto px = [&](double x) { return svg_num(kMargin + (x - x0) * scale); };
  const auto py = [&](double y) { return svg_num(kMargin + (y1 - y) * scale); };
  const double width = kPlot + 2 * kMargin + kLegend;
  const double height = kPlot + 2 * kMargin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_num(width) << "\" height=\"" << svg_num(height)
     << "\" viewBox=\"0 0 " << svg_num(width) << ' ' << svg_num(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto lattice_layer = [&](const char* id, const std::vector<LatticeId>& members, const char* stroke,
                                 double r) {
    os << "<g id=\"" << id << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"0.8\">\n";
    std::array<double, 2> c{};
    for (LatticeId m : members) {
      grid.coords_of(m, c);
      os << "<circle cx=\"" << px(c[0]) << "\" cy=\"" << py(c[1]) << "\" r=\"" << svg_num(r) << "\"/>\n";
    }
    os << "</g>\n";
  };

  os << "<g id=\"cluster\" fill=\"#1f4fd8\">\n";
  for (PointId i = 0; i < cluster.size(); ++i) {
    const auto p = cluster.point(i);
    os << "<circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1]) << "\" r=\"1.5\"/>\n";
  }
  os << "</g>\n";
  lattice_layer("sampled-grid", report.sampled, "#e03030", 2.5);
  lattice_layer("non-neighboring", report.non_neighboring.members, "#20a040", 3.5);
  lattice_layer("probe-points", report.marginal.probe_points, "#d020d0", 4.0);

  os << "<g id=\"marginal\" fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& m : report.marginal.members) {
    const auto p = cluster.point(m.id);
    os << "<circle cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1]) << "\" r=\"3\"/>\n";
  }
  os << "</g>\n";

  if (report.witness && report.witness_pair) {
    os << "<g id=\"witness\">\n";
    for (PointId id : {report.witness_pair->first, report.witness_pair->second}) {
      const auto p = cluster.point(id);
      const double cx = kMargin + (p[0] - x0) * scale;
      const double cy = kMargin + (y1 - p[1]) * scale;
      os << "<polygon fill=\"black\" points=\"" << svg_num(cx) << ',' << svg_num(cy - 7) << ' ' << svg_num(cx - 6)
         << ',' << svg_num(cy + 5) << ' ' << svg_num(cx + 6) << ',' << svg_num(cy + 5) << "\"/>\n";
    }
    const auto& w = *report.witness;
    os << "<circle cx=\"" << px(w[0]) << "\" cy=\"" << py(w[1]) << "\" r=\"" << svg_num(eps * scale)
       << "\" fill=\"none\" stroke=\"#20a040\" stroke-width=\"1.5\"/>\n";
    const double wx = kMargin + (w[0] - x0) * scale;
    const double wy = kMargin + (y1 - w[1]) * scale;
    os << "<rect x=\"" << svg_num(wx - 4) << "\" y=\"" << svg_num(wy - 4)
       << "\" width=\"8\" height=\"8\" fill=\"#e03030\"/>\n";
    os << "</g>\n";
  }

  const double lx = kPlot + 2 * kMargin + 10;
  struct Entry {
    const char* label;
    const char* swatch;
  };
  const Entry entries[] = {
      {"cluster points", "<circle r=\"2\" fill=\"#1f4fd8\"/>"},
      {"sampled grid points", "<circle r=\"4\" fill=\"none\" stroke=\"#e03030\"/>"},
      {"non-neighboring grid points", "<circle r=\"4\" fill=\"none\" stroke=\"#20a040\"/>"},
      {"probe (marginal grid) points", "<circle r=\"4\" fill=\"none\" stroke=\"#d020d0\"/>"},
      {"marginal cluster points", "<circle r=\"4\" fill=\"none\" stroke=\"black\"/>"},
      {"witness pair", "<polygon points=\"0,-6 -5,4 5,4\" fill=\"black\"/>"},
      {"uncovered midpoint", "<rect x=\"-4\" y=\"-4\" width=\"8\" height=\"8\" fill=\"#e03030\"/>"},
      {"eps-circle of midpoint", "<circle r=\"6\" fill=\"none\" stroke=\"#20a040\"/>"},
  };
  os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  double ly = kMargin + 10;
  for (const auto& e : entries) {
    os << "<g transform=\"translate(" << svg_num(lx + 8) << ',' << svg_num(ly) << ")\">" << e.swatch
       << "<text x=\"14\" y=\"4\">" << e.label << "</text></g>\n";
    ly += 22;
  }
  os << "<text x=\"" << svg_num(lx) << "\" y=\"" << svg_num(ly + 10) << "\">eps=" << format_double(eps)
     << " eta=" << format_double(report.params.eta) << "</text>\n";
  os << "<text x=\"" << svg_num(lx) << "\" y=\"" << svg_num(ly + 28) << "\">verdict: "
     << (report.omega ? "convex at precision eps" : "non-convex") << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace gridconvex
