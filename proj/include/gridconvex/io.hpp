#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gridconvex/convexity.hpp"
#include "gridconvex/datagen.hpp"
#include "gridconvex/geometry.hpp"

namespace gridconvex {

inline constexpr std::string_view kVersion = "gridconvex 1.0.0";

// Point files: one point per row, comma separated (semicolon, tab and
// whitespace are accepted too). Blank lines and lines starting with '#' are
// skipped. A first row that does not parse as numbers is taken as a header.

Cluster read_points(std::istream& in);
Cluster read_points(const std::filesystem::path& path);

/// Writes a header row (x0, x1, ...) and one row per point, 17 significant
/// digits, so reading the file back reproduces every coordinate exactly.
/// `comment`, when non-empty, is written first as a '#' line.
void write_points(std::ostream& out, const Cluster& cluster, std::string_view comment = {});
void write_points(const std::filesystem::path& path, const Cluster& cluster, std::string_view comment = {});

/// 17 significant digits; parses back to the identical double.
std::string format_double(double value);

/// Report as compact, key-sorted JSON terminated by a newline.
std::string report_to_json(const AnalysisReport& report);

/// Shape parameters as JSON (the format of the files under configs/).
ShapeSpec shape_from_json(std::string_view text);
ShapeSpec read_shape_config(const std::filesystem::path& path);

/// Layered 2-D figure: cluster, sampled grid, non-neighbouring points, probe
/// points, marginal points and, if present, the witness pair with its
/// midpoint and eps-circle. Throws ContractViolation when p != 2.
std::string report_to_svg(const Cluster& cluster, const AnalysisReport& report);

}  // namespace gridconvex
