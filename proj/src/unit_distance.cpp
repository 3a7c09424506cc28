#include "linecurve/unit_distance.hpp"

#include <cmath>
#include <stdexcept>

namespace linecurve {

std::vector<Vec2> ScaledGrid::points() const {
    if (n < 1) throw std::invalid_argument("ScaledGrid: n must be >= 1");
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(size()));
    double dn = static_cast<double>(n);
    double dn2 = dn * dn;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n * n; ++j)
            pts.push_back({static_cast<double>(i) / dn, static_cast<double>(j) / dn2});
    return pts;
}

std::uint64_t unit_pairs_exact(const ScaledGrid& grid) {
    const std::int64_t n = grid.n;
    if (n < 1) throw std::invalid_argument("unit_pairs_exact: n must be >= 1");
    const std::int64_t n2 = n * n;
    if (n > (std::int64_t{1} << 20))
        throw std::overflow_error("unit_pairs_exact: grid too large for exact counting");

    // Unordered difference classes up to sign: di >= 0, with dj > 0 when
    // di = 0. Parity: 2*dj = n^2 - di^2 needs di == n (mod 2).
    std::uint64_t total = 0;
    for (std::int64_t di = (n % 2 == 0) ? 0 : 1; di < n; di += 2) {
        std::int64_t dj = (n2 - di * di) / 2;
        std::uint64_t span_i = static_cast<std::uint64_t>(n - di);
        std::uint64_t span_j = static_cast<std::uint64_t>(n2 - dj);
        std::uint64_t pairs = span_i * span_j;
        // di > 0 has the two classes (di, +dj) and (di, -dj); di = 0 only
        // (0, +dj).
        total += (di == 0) ? pairs : 2 * pairs;
    }
    return total;
}

std::uint64_t unit_pairs_bruteforce(std::span<const Vec2> points, const UnitBall& ball,
                                    double tol) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            count += ball.on_boundary(points[j] - points[i], tol);
    return count;
}

std::uint64_t boundary_incidences_bruteforce(std::span<const Vec2> points,
                                             const UnitBall& ball, double tol) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            if (i != j) count += ball.on_boundary(points[j] - points[i], tol);
    return count;
}

bool translate_incidence_identity(std::span<const Vec2> points, const UnitBall& ball,
                                  double tol) {
    return 2 * unit_pairs_bruteforce(points, ball, tol) ==
           boundary_incidences_bruteforce(points, ball, tol);
}

double exponent_fit(std::span<const std::pair<std::uint64_t, std::uint64_t>> counts) {
    if (counts.size() < 3)
        throw std::invalid_argument("exponent_fit: need at least 3 entries");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i].second == 0)
            throw std::invalid_argument("exponent_fit: counts must be positive");
        if (i > 0 && counts[i].first <= counts[i - 1].first)
            throw std::invalid_argument("exponent_fit: N must be strictly increasing");
    }
    double mx = 0.0, my = 0.0;
    for (const auto& [n, c] : counts) {
        mx += std::log(static_cast<double>(n));
        my += std::log(static_cast<double>(c));
    }
    mx /= static_cast<double>(counts.size());
    my /= static_cast<double>(counts.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [n, c] : counts) {
        double dx = std::log(static_cast<double>(n)) - mx;
        double dy = std::log(static_cast<double>(c)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    return sxy / sxx;
}

} // namespace linecurve
