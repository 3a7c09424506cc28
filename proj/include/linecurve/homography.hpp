#pragma once

#include <array>
#include <utility>

#include "linecurve/mat3.hpp"

namespace linecurve {

using PointPair = std::pair<Vec2, Vec2>; // source -> target

// The unique projective map sending four source points to four target
// points, via projective coordinates: express the fourth point of each
// quadruple in the basis of the first three, then compose the two frame
// maps. Requires both quadruples in general position (every 3-subset has
// |det| > 1e-10 * scale^2); throws std::domain_error otherwise.
ProjMat projective_from_correspondences(const std::array<PointPair, 4>& pairs);

} // namespace linecurve
