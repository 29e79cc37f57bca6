// SPDX-License-Identifier: Apache-2.0

#include "pinris/placement.hpp"

#include <string>

namespace pinris {

std::string_view to_string(UserPlacement placement) {
  switch (placement) {
    case UserPlacement::Uniform: return "uniform";
    case UserPlacement::Symmetric: return "symmetric";
    case UserPlacement::Center: return "center";
  }
  return "uniform";
}

UserPlacement parse_placement(std::string_view text) {
  if (text == "uniform") return UserPlacement::Uniform;
  if (text == "symmetric") return UserPlacement::Symmetric;
  if (text == "center") return UserPlacement::Center;
  throw ConfigError("unknown placement '" + std::string(text) + "' (uniform|symmetric|center)");
}

UserPositions place_users(const ScenarioGeometry& g, UserPlacement placement, const double (&u)[4]) {
  const double d = g.region_offset_m;
  const double side = g.region_side_m;
  switch (placement) {
    case UserPlacement::Center:
      return {-g.region_center_x_m(), 0.0, g.region_center_x_m(), 0.0};
    case UserPlacement::Symmetric: {
      const double y = side * (u[3] - 0.5);
      return {-(d + side * u[0]), y, d + side * u[1], y};
    }
    case UserPlacement::Uniform:
      break;
  }
  return {-(d + side * u[0]), side * (u[2] - 0.5), d + side * u[1], side * (u[3] - 0.5)};
}

UserPositions draw_user_positions(const ScenarioGeometry& g, UserPlacement placement, rng::Substream& stream) {
  double u[4];
  for (double& v : u) v = stream.uniform();
  return place_users(g, placement, u);
}

}  // namespace pinris
