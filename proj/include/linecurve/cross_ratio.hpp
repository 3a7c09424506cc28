#pragma once

#include <array>
#include <functional>
#include <span>

#include "linecurve/vec.hpp"

namespace linecurve {

// Cross-ratio of four collinear parameters, fixed to the convention
//   (a,b; c,d) = ((c-a)(d-b)) / ((d-a)(c-b)).
// Zero when a=c or d=b; (a,b;c,d) + (a,c;b,d) = 1; harmonic quadruples
// give -1. Throws std::domain_error when d=a or c=b (denominator) within
// 1e-12 relative to the parameter scale.
double cross_ratio(double a, double b, double c, double d);

// Four points on one line together with their affine parameters.
struct CollinearQuad {
    std::array<Vec2, 4> points;
    std::array<double, 4> params;

    // points[i] = base + params[i] * dir.
    static CollinearQuad on_line(Vec2 base, Vec2 dir, std::array<double, 4> params);

    // Max perpendicular distance from the points to their common line
    // (direction normalized).
    double collinearity_residual() const;
};

// Builds the quad from raw points: fits the line through the farthest
// pair, projects for parameters, and rejects the quad when some point is
// farther than tol from that line.
CollinearQuad make_collinear_quad(const std::array<Vec2, 4>& pts, double tol = 1e-9);

double cross_ratio_points(const CollinearQuad& quad);

using PointMap = std::function<Vec2(Vec2)>;

// Max |cross_ratio(images) - cross_ratio(sources)| over the quads.
// Throws when some image quad is non-collinear beyond tol: the map is not
// segment-preserving on that line.
double verify_cross_ratio_preservation(const PointMap& map,
                                       std::span<const CollinearQuad> quads,
                                       double tol);

} // namespace linecurve
