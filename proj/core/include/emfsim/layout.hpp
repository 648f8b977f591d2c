// SPDX-License-Identifier: Apache-2.0
//
// Hexagonal multi-site network layout and UE placement.
//
// Sites sit on a hexagonal lattice with spacing equal to the inter-site
// distance; ring 1 neighbors are at azimuths 30 + 60k degrees. Each site owns
// a regular hexagon of circumradius profile.cell_radius_m with vertices at
// azimuths 60k, split into three rhombic 120-degree sectors with boresights
// 0, 120 and 240 degrees.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "emfsim/profiles.hpp"
#include "emfsim/random.hpp"

namespace emfsim {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Index of a sector in the layout vector (site_index * 3 + sector_index).
struct SectorId {
  std::uint32_t value = 0;

  auto operator<=>(const SectorId&) const = default;
};

struct SectorGeometry {
  int site_index = 0;
  int sector_index = 0;
  Point2 bs_position;
  double boresight_deg = 0.0;
  double antenna_height_m = 0.0;
  /// Rhombus: site center, then the three hexagon vertices at
  /// boresight - 60, boresight and boresight + 60 degrees.
  std::array<Point2, 4> region{};

  SectorId id() const { return SectorId{static_cast<std::uint32_t>(site_index * 3 + sector_index)}; }
  bool contains(Point2 p) const;
  double area() const;
  Point2 centroid() const;
};

struct UeDrop {
  Point2 position;
  double height_m = 1.5;
  SectorId home_sector;
};

struct LinkGeometry {
  double distance_2d_m = 0.0;
  double distance_3d_m = 0.0;
  /// Horizontal angle from boresight, in (-180, 180].
  double azimuth_offset_deg = 0.0;
  /// Zenith angle of the UE seen from the antenna: 90 is the horizon,
  /// 180 straight down. Range [0, 180].
  double elevation_angle_deg = 90.0;

  /// Offset from the (untilted) horizontal boresight.
  double elevation_offset_deg() const { return elevation_angle_deg - 90.0; }
};

std::vector<Point2> site_positions(double inter_site_distance_m, int num_rings);

/// Throws ConfigError if num_rings is outside [0, 2].
std::vector<SectorGeometry> build_layout(const SystemProfile& profile, int num_rings);
inline std::vector<SectorGeometry> build_layout(const SystemProfile& profile) {
  return build_layout(profile, profile.layout_rings);
}

/// Uniform position in the sector region by rejection from the bounding box.
UeDrop sample_ue(const SectorGeometry& sector, RandomStream& rng,
                 double ue_height_m = 1.5);

/// Planar distance is clamped below at 1 m.
LinkGeometry link_geometry(const SectorGeometry& sector, const UeDrop& ue);

/// CSV with header site_index,sector_index,bs_x,bs_y,boresight_deg.
void write_layout_csv(std::ostream& out, const std::vector<SectorGeometry>& layout);

}  // namespace emfsim
