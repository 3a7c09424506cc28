#pragma once

#include <string>
#include <vector>

#include "linecurve/vec.hpp"

namespace linecurve {

// One polyline per series, viewBox fitted to the data with a 5% margin,
// 800x600 user units, y axis pointing up. Empty input (no series or all
// series empty) throws std::invalid_argument.
std::string svg_polylines(const std::vector<std::vector<Vec2>>& series,
                          const std::string& stroke = "");

} // namespace linecurve
