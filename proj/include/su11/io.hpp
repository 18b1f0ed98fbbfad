#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su11/closed_form.hpp"

namespace su11 {

/// One CSV row: theta,x1,x2,x3,route
struct CsvRow {
  double theta = 0.0;
  MVec3 r;
  Route route = Route::ClosedForm;
};

/// Header `theta,x1,x2,x3,route`, 17 significant digits, LF line endings.
std::string trajectories_to_csv(const std::vector<Trajectory>& trajectories);
std::vector<CsvRow> parse_trajectory_csv(std::string_view text);

struct SvgPlot {
  std::string title;
  std::vector<Trajectory> curves;       // drawn as polylines
  std::vector<Trajectory> point_sets;   // drawn as dots
  MVec3 q{0.0, 0.0, 1.0};
  std::optional<std::pair<double, double>> parallels;  // A1, A2 on the elliptic hyperboloid
};

/// Two panels: projection onto the x1-x2 plane, and x3 against theta.
std::string render_svg(const SvgPlot& plot);

/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace su11
