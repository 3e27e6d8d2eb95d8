#pragma once

// CSV tables with exact rationals and SVG plots of atlases. Fields holding
// vectors use ';' as the inner separator.

#include <string>
#include <vector>

#include "mmi/ray_series.hpp"
#include "mmi/wall_atlas.hpp"

namespace mmi {

std::string walk_csv(const IdealTuple& t, const std::vector<RayPoint>& walk);

std::string atlas_cells_csv(const WallAtlas& atlas);
std::string atlas_facets_csv(const IdealTuple& t, const WallAtlas& atlas);
std::string atlas_vertices_csv(const IdealTuple& t, const WallAtlas& atlas);

/// Filled constancy regions, stroked facets (log-canonical ones in red) and
/// the axis thresholds. Coordinates are the only decimal values.
std::string atlas_svg(const IdealTuple& t, const WallAtlas& atlas);

}  // namespace mmi
