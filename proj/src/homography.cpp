#include "linecurve/homography.hpp"

#include <cmath>
#include <stdexcept>

namespace linecurve {

namespace {

// Solve the 3x3 system a*x = rhs by partial-pivot elimination.
Vec3 solve3(Mat3 a, Vec3 rhs, double scale) {
    for (int step = 0; step < 3; ++step) {
        int piv = step;
        for (int i = step + 1; i < 3; ++i)
            if (std::fabs(a(i, step)) > std::fabs(a(piv, step))) piv = i;
        if (std::fabs(a(piv, step)) <= 1e-14 * scale)
            throw std::domain_error("projective_from_correspondences: singular frame");
        if (piv != step) {
            for (int j = 0; j < 3; ++j) std::swap(a(step, j), a(piv, j));
            std::swap(rhs[step], rhs[piv]);
        }
        for (int i = step + 1; i < 3; ++i) {
            double f = a(i, step) / a(step, step);
            for (int j = step; j < 3; ++j) a(i, j) -= f * a(step, j);
            rhs[i] -= f * rhs[step];
        }
    }
    Vec3 x;
    for (int i = 2; i >= 0; --i) {
        double acc = rhs[i];
        for (int j = i + 1; j < 3; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

// Frame map: sends e1,e2,e3,(1,1,1) to the four homogeneous points.
Mat3 frame_matrix(const std::array<Vec2, 4>& pts) {
    double scale = 1.0;
    for (const auto& p : pts)
        scale = std::fmax(scale, std::fmax(std::fabs(p.x), std::fabs(p.y)));
    // General position: no 3 of the 4 points collinear.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                double det = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                             (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
                if (std::fabs(det) <= 1e-10 * scale * scale)
                    throw std::domain_error(
                        "projective_from_correspondences: three points collinear");
            }
    Mat3 base = Mat3::from_columns({pts[0].x, pts[0].y, 1.0},
                                   {pts[1].x, pts[1].y, 1.0},
                                   {pts[2].x, pts[2].y, 1.0});
    Vec3 coeff = solve3(base, {pts[3].x, pts[3].y, 1.0}, scale);
    return Mat3::from_columns(base.col(0) * coeff.x, base.col(1) * coeff.y,
                              base.col(2) * coeff.z);
}

} // namespace

ProjMat projective_from_correspondences(const std::array<PointPair, 4>& pairs) {
    std::array<Vec2, 4> src, dst;
    for (int i = 0; i < 4; ++i) {
        src[i] = pairs[i].first;
        dst[i] = pairs[i].second;
    }
    Mat3 fs = frame_matrix(src);
    Mat3 fd = frame_matrix(dst);
    return ProjMat(fd * fs.inverse());
}

} // namespace linecurve
