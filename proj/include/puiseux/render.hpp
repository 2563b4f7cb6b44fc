#pragma once

#include <string>

#include "puiseux/polygon.hpp"

namespace puiseux {

enum class PolygonFormat { ascii, svg };

/// ASCII: one row per y-degree v, one column per distinct u; hull vertices are '*',
/// other marked points 'o', followed by the edge list with their inclinations.
/// SVG: coordinates are the exact points scaled by the common denominator of u.
std::string render_polygon(const PolygonView& view, PolygonFormat format);

}  // namespace puiseux
