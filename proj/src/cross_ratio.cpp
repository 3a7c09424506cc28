#include "linecurve/cross_ratio.hpp"

#include <cmath>
#include <stdexcept>

namespace linecurve {

double cross_ratio(double a, double b, double c, double d) {
    double scale = std::fmax(std::fmax(std::fabs(a), std::fabs(b)),
                             std::fmax(std::fabs(c), std::fabs(d)));
    double eps = 1e-12 * std::fmax(scale, 1.0);
    double den = (d - a) * (c - b);
    if (std::fabs(d - a) <= eps || std::fabs(c - b) <= eps)
        throw std::domain_error("cross_ratio: degenerate quadruple (d=a or c=b)");
    return ((c - a) * (d - b)) / den;
}

CollinearQuad CollinearQuad::on_line(Vec2 base, Vec2 dir, std::array<double, 4> params) {
    CollinearQuad q;
    q.params = params;
    for (int i = 0; i < 4; ++i) q.points[i] = base + params[i] * dir;
    return q;
}

double CollinearQuad::collinearity_residual() const {
    // Direction from the farthest pair, perpendicular residual of the rest.
    int bi = 0, bj = 1;
    double best = -1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double d = (points[j] - points[i]).norm();
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    if (!(best > 0.0)) return 0.0; // all points coincide
    Vec2 dir = (points[bj] - points[bi]) * (1.0 / best);
    double r = 0.0;
    for (const auto& p : points)
        r = std::fmax(r, std::fabs((p - points[bi]).cross(dir)));
    return r;
}

CollinearQuad make_collinear_quad(const std::array<Vec2, 4>& pts, double tol) {
    int bi = 0, bj = 1;
    double best = -1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double d = (pts[j] - pts[i]).norm();
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    if (!(best > 0.0))
        throw std::domain_error("make_collinear_quad: coincident points");
    Vec2 dir = (pts[bj] - pts[bi]) * (1.0 / best);
    CollinearQuad q;
    q.points = pts;
    for (int i = 0; i < 4; ++i) {
        Vec2 rel = pts[i] - pts[bi];
        if (std::fabs(rel.cross(dir)) > tol)
            throw std::domain_error("make_collinear_quad: points not collinear within tolerance");
        q.params[i] = rel.dot(dir);
    }
    return q;
}

double cross_ratio_points(const CollinearQuad& quad) {
    if (quad.collinearity_residual() > 1e-9)
        throw std::domain_error("cross_ratio_points: quad not collinear");
    return cross_ratio(quad.params[0], quad.params[1], quad.params[2], quad.params[3]);
}

double verify_cross_ratio_preservation(const PointMap& map,
                                       std::span<const CollinearQuad> quads,
                                       double tol) {
    double worst = 0.0;
    for (const auto& q : quads) {
        // Source parameters re-derived by the same projection as the image
        // ones, so the identity map compares bit-identical values.
        CollinearQuad sq = make_collinear_quad(q.points, tol);
        double source = cross_ratio(sq.params[0], sq.params[1], sq.params[2], sq.params[3]);
        std::array<Vec2, 4> images;
        for (int i = 0; i < 4; ++i) images[i] = map(q.points[i]);
        CollinearQuad iq = make_collinear_quad(images, tol); // throws if bent
        double image = cross_ratio(iq.params[0], iq.params[1], iq.params[2], iq.params[3]);
        worst = std::fmax(worst, std::fabs(image - source));
    }
    return worst;
}

} // namespace linecurve
