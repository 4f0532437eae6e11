#pragma once

#include <optional>
#include <string>
#include <vector>

namespace manhattan {

struct SeriesPoint {
  double x = 0;
  double y = 0;
};

struct ErrorBarPoint {
  double x = 0;
  double y = 0;
  double half_width = 0;
};

// Inputs for the fixed-layout 800x600 MSD plot: a formula curve, exact
// oracle markers, Monte Carlo error bars and an optional y = slope*x
// asymptote. Rendering is deterministic: same spec, same bytes.
struct SvgPlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SeriesPoint> curve;
  std::vector<SeriesPoint> oracle_points;
  std::vector<ErrorBarPoint> mc_points;
  std::optional<double> asymptote_slope;
};

std::string render_svg_plot(const SvgPlotSpec& spec);

}  // namespace manhattan
