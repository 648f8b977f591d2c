// SPDX-License-Identifier: Apache-2.0
//
// Minimal line-chart renderer producing standalone SVG documents.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace emfsim {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  /// Draw as a CDF staircase instead of straight segments.
  bool step = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  /// Optional horizontal/vertical reference lines, e.g. a regulatory limit.
  std::vector<double> x_markers;
  std::vector<double> y_markers;
  std::vector<PlotSeries> series;
};

std::string render_svg(const PlotSpec& spec, int width = 640, int height = 420);

}  // namespace emfsim
