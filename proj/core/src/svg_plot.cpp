// SPDX-License-Identifier: Apache-2.0

#include "emfsim/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace emfsim {
namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 50.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double transform(double v) const { return log ? std::log10(v) : v; }
  double unit(double v) const { return (transform(v) - transform(lo)) / (transform(hi) - transform(lo)); }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      for (double e = std::floor(std::log10(lo)); e <= std::ceil(std::log10(hi)); e += 1.0) {
        const double v = std::pow(10.0, e);
        if (v >= lo * (1 - 1e-9) && v <= hi * (1 + 1e-9)) out.push_back(v);
      }
      return out;
    }
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
      if (raw <= m * mag) {
        step = m * mag;
        break;
      }
    }
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) out.push_back(v);
    return out;
  }
};

Axis make_axis(const std::vector<double>& values, bool log) {
  Axis axis;
  axis.log = log;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    if (!std::isfinite(v) || (log && v <= 0.0)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo)) {
    lo = log ? 1.0 : 0.0;
    hi = log ? 10.0 : 1.0;
  }
  if (hi <= lo) {
    hi = log ? lo * 10.0 : lo + 1.0;
  }
  if (log) {
    lo = std::pow(10.0, std::floor(std::log10(lo)));
    hi = std::pow(10.0, std::ceil(std::log10(hi)));
  }
  axis.lo = lo;
  axis.hi = hi;
  return axis;
}

}  // namespace

std::string render_svg(const PlotSpec& spec, int width, int height) {
  std::vector<double> xs = spec.x_markers;
  std::vector<double> ys = spec.y_markers;
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      xs.push_back(x);
      ys.push_back(y);
    }
  }
  const Axis ax = make_axis(xs, spec.log_x);
  const Axis ay = make_axis(ys, spec.log_y);

  const double plot_w = width - kMarginLeft - kMarginRight;
  const double plot_h = height - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + ax.unit(x) * plot_w; };
  auto py = [&](double y) { return kMarginTop + (1.0 - ay.unit(y)) * plot_h; };
  auto drawable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!ax.log || x > 0.0) && (!ay.log || y > 0.0);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(spec.title)
      << "</text>\n";

  // Grid and tick labels.
  for (double t : ax.ticks()) {
    svg << "<line x1=\"" << fmt(px(t)) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\"" << fmt(px(t)) << "\" y2=\""
        << fmt(kMarginTop + plot_h) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << fmt(px(t)) << "\" y=\"" << fmt(kMarginTop + plot_h + 16)
        << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (double t : ay.ticks()) {
    svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(py(t)) << "\" x2=\"" << fmt(kMarginLeft + plot_w)
        << "\" y2=\"" << fmt(py(t)) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << fmt(kMarginLeft - 6) << "\" y=\"" << fmt(py(t) + 4) << "\" text-anchor=\"end\">"
        << tick_label(t) << "</text>\n";
  }
  svg << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop) << "\" width=\"" << fmt(plot_w)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << fmt(kMarginLeft + plot_w / 2) << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">"
      << escape(spec.x_label) << "</text>\n";
  svg << "<text transform=\"translate(16," << fmt(kMarginTop + plot_h / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(spec.y_label) << "</text>\n";

  for (double m : spec.x_markers) {
    if (!drawable(m, ay.lo)) continue;
    svg << "<line x1=\"" << fmt(px(m)) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\"" << fmt(px(m)) << "\" y2=\""
        << fmt(kMarginTop + plot_h) << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (double m : spec.y_markers) {
    if (!drawable(ax.lo, m)) continue;
    svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(py(m)) << "\" x2=\"" << fmt(kMarginLeft + plot_w)
        << "\" y2=\"" << fmt(py(m)) << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  }

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* color = kPalette[i % kPalette.size()];
    std::ostringstream path;
    bool first = true;
    double prev_y = 0.0;
    for (const auto& [x, y] : s.points) {
      if (!drawable(x, y)) continue;
      if (first) {
        path << "M" << fmt(px(x)) << "," << fmt(py(y));
        first = false;
      } else {
        if (s.step) path << " L" << fmt(px(x)) << "," << fmt(py(prev_y));
        path << " L" << fmt(px(x)) << "," << fmt(py(y));
      }
      prev_y = y;
    }
    if (!first) {
      svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\"/>\n";
    }
    const double ly = kMarginTop + 14 + 16 * static_cast<double>(i);
    const double lx = kMarginLeft + plot_w - 150;
    svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\"" << fmt(lx + 20) << "\" y2=\""
        << fmt(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fmt(lx + 26) << "\" y=\"" << fmt(ly) << "\">" << escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace emfsim
