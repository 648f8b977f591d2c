// SPDX-License-Identifier: Apache-2.0

#include "emfsim/layout.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "emfsim/units.hpp"

namespace emfsim {
namespace {

constexpr int kMaxRejectionTries = 1000;

Point2 polar(Point2 origin, double radius, double azimuth_deg) {
  const double a = deg_to_rad(azimuth_deg);
  return {origin.x + radius * std::cos(a), origin.y + radius * std::sin(a)};
}

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Point2 sample_triangle(Point2 a, Point2 b, Point2 c, RandomStream& rng) {
  double u = rng.uniform01();
  double v = rng.uniform01();
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return {a.x + u * (b.x - a.x) + v * (c.x - a.x), a.y + u * (b.y - a.y) + v * (c.y - a.y)};
}

}  // namespace

bool SectorGeometry::contains(Point2 p) const {
  // Vertices are stored counter-clockwise.
  for (std::size_t i = 0; i < region.size(); ++i) {
    const Point2 a = region[i];
    const Point2 b = region[(i + 1) % region.size()];
    if (cross(a, b, p) < 0.0) return false;
  }
  return true;
}

double SectorGeometry::area() const {
  double twice = 0.0;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const Point2 a = region[i];
    const Point2 b = region[(i + 1) % region.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

Point2 SectorGeometry::centroid() const {
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const Point2 a = region[i];
    const Point2 b = region[(i + 1) % region.size()];
    const double w = a.x * b.y - b.x * a.y;
    twice_area += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  return {cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

std::vector<Point2> site_positions(double inter_site_distance_m, int num_rings) {
  require(num_rings >= 0 && num_rings <= 2, "num_rings must be 0, 1 or 2");
  require(std::isfinite(inter_site_distance_m) && inter_site_distance_m > 0.0,
          "inter-site distance must be positive");
  const Point2 origin{};
  std::vector<Point2> sites{origin};
  if (num_rings >= 1) {
    for (int k = 0; k < 6; ++k) sites.push_back(polar(origin, inter_site_distance_m, 30.0 + 60.0 * k));
  }
  if (num_rings >= 2) {
    for (int k = 0; k < 6; ++k) {
      sites.push_back(polar(origin, 2.0 * inter_site_distance_m, 30.0 + 60.0 * k));
      sites.push_back(polar(origin, std::sqrt(3.0) * inter_site_distance_m, 60.0 + 60.0 * k));
    }
  }
  return sites;
}

std::vector<SectorGeometry> build_layout(const SystemProfile& profile, int num_rings) {
  const auto sites = site_positions(profile.inter_site_distance_m, num_rings);
  const double radius = profile.cell_radius_m;
  require(std::isfinite(radius) && radius > 0.0, "cell radius must be positive");

  std::vector<SectorGeometry> layout;
  layout.reserve(sites.size() * 3);
  for (std::size_t s = 0; s < sites.size(); ++s) {
    for (int k = 0; k < 3; ++k) {
      SectorGeometry sector;
      sector.site_index = static_cast<int>(s);
      sector.sector_index = k;
      sector.bs_position = sites[s];
      sector.boresight_deg = 120.0 * k;
      sector.antenna_height_m = profile.bs_antenna_height_m;
      sector.region = {sites[s], polar(sites[s], radius, sector.boresight_deg - 60.0),
                       polar(sites[s], radius, sector.boresight_deg),
                       polar(sites[s], radius, sector.boresight_deg + 60.0)};
      layout.push_back(sector);
    }
  }
  return layout;
}

UeDrop sample_ue(const SectorGeometry& sector, RandomStream& rng, double ue_height_m) {
  double min_x = sector.region[0].x, max_x = min_x;
  double min_y = sector.region[0].y, max_y = min_y;
  for (const auto& v : sector.region) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }

  UeDrop ue;
  ue.height_m = ue_height_m;
  ue.home_sector = sector.id();
  for (int attempt = 0; attempt < kMaxRejectionTries; ++attempt) {
    const Point2 p{rng.uniform(min_x, max_x), rng.uniform(min_y, max_y)};
    if (sector.contains(p)) {
      ue.position = p;
      return ue;
    }
  }
  // Acceptance is about one half for a rhombus, so this is practically
  // unreachable; split into the two equal-area triangles instead.
  const auto& r = sector.region;
  ue.position = rng.uniform01() < 0.5 ? sample_triangle(r[0], r[1], r[2], rng)
                                      : sample_triangle(r[0], r[2], r[3], rng);
  return ue;
}

LinkGeometry link_geometry(const SectorGeometry& sector, const UeDrop& ue) {
  const double dx = ue.position.x - sector.bs_position.x;
  const double dy = ue.position.y - sector.bs_position.y;
  const double dh = sector.antenna_height_m - ue.height_m;

  LinkGeometry g;
  g.distance_2d_m = std::max(std::hypot(dx, dy), constants::kMinDistance);
  g.distance_3d_m = std::sqrt(g.distance_2d_m * g.distance_2d_m + dh * dh);
  g.azimuth_offset_deg =
      (dx == 0.0 && dy == 0.0) ? 0.0 : wrap_degrees(rad_to_deg(std::atan2(dy, dx)) - sector.boresight_deg);
  g.elevation_angle_deg = 90.0 + rad_to_deg(std::atan2(dh, g.distance_2d_m));
  return g;
}

void write_layout_csv(std::ostream& out, const std::vector<SectorGeometry>& layout) {
  out << "site_index,sector_index,bs_x,bs_y,boresight_deg\n";
  for (const auto& s : layout) {
    out << s.site_index << ',' << s.sector_index << ',' << s.bs_position.x << ',' << s.bs_position.y << ','
        << s.boresight_deg << '\n';
  }
}

}  // namespace emfsim
