// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "pinris/config.hpp"
#include "pinris/rng.hpp"

namespace pinris {

/// U1 lives in x in [-(d+L), -d], U2 in x in [d, d+L]; both have y in [-L/2, L/2].
struct UserPositions {
  double x1 = 0.0, y1 = 0.0;
  double x2 = 0.0, y2 = 0.0;
};

enum class UserPlacement {
  Uniform,    // independent uniform draws in each region
  Symmetric,  // uniform, but y2 = y1
  Center,     // both users pinned to their region centers
};

std::string_view to_string(UserPlacement placement);
UserPlacement parse_placement(std::string_view text);

/// Maps four unit uniforms to positions; the same uniforms give the same
/// relative placement for any d and L (common random numbers in sweeps).
UserPositions place_users(const ScenarioGeometry& g, UserPlacement placement, const double (&u)[4]);

/// Consumes four uniforms from the Geometry substream.
UserPositions draw_user_positions(const ScenarioGeometry& g, UserPlacement placement, rng::Substream& stream);

}  // namespace pinris
