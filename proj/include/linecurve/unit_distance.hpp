#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "linecurve/vec.hpp"

namespace linecurve {

// Centrally symmetric convex lens bounded by the arcs y = (x^2 - 1)/2 and
// y = (1 - x^2)/2 for |x| <= 1; the lower arc is the parabola y = x^2/2
// shifted down by 1/2. Its Minkowski gauge has the closed form
// |v.y| + |v|_2 (solve the quadratic arc equation along the ray and
// rationalize).
struct UnitBall {
    static double lower_arc(double t) { return (t * t - 1.0) / 2.0; }
    static double upper_arc(double t) { return (1.0 - t * t) / 2.0; }

    static double gauge(Vec2 v) {
        return std::fabs(v.y) + std::hypot(v.x, v.y);
    }

    static bool on_boundary(Vec2 v, double tol) {
        return std::fabs(gauge(v) - 1.0) <= tol;
    }
};

// The n x n^2 grid scaled into the unit square: (i/n, j/n^2) for
// 0 <= i < n, 0 <= j < n^2; N = n^3 points.
struct ScaledGrid {
    std::int64_t n = 1;

    std::uint64_t size() const {
        auto un = static_cast<std::uint64_t>(n);
        return un * un * un;
    }
    std::vector<Vec2> points() const;
};

// Unordered pairs at gauge exactly 1, counted without floating point:
// the difference (di, dj) in grid units is on the boundary iff
// |di| <= n and 2*dj = +-(n^2 - di^2), which forces di == n (mod 2);
// each admissible class contributes (n - |di|) * (n^2 - |dj|) pairs.
std::uint64_t unit_pairs_exact(const ScaledGrid& grid);

// O(N^2) oracle over explicit points.
std::uint64_t unit_pairs_bruteforce(std::span<const Vec2> points, const UnitBall& ball,
                                    double tol);

// Ordered point/translated-boundary incidences: sum over p of
// #{q != p : q on p + boundary}. Equals twice the unordered pair count.
std::uint64_t boundary_incidences_bruteforce(std::span<const Vec2> points,
                                             const UnitBall& ball, double tol);

// Checks 2 * pairs == ordered incidences with both sides brute-forced.
bool translate_incidence_identity(std::span<const Vec2> points, const UnitBall& ball,
                                  double tol);

// Least-squares slope of ln(count) against ln(N). Requires >= 3 entries,
// strictly increasing N, positive counts.
double exponent_fit(std::span<const std::pair<std::uint64_t, std::uint64_t>> counts);

} // namespace linecurve
