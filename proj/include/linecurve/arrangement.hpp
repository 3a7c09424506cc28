#pragma once

#include <cstdint>
#include <vector>

#include "linecurve/curve_maps.hpp"
#include "linecurve/incidence_kernel.hpp"
#include "linecurve/vec.hpp"

namespace linecurve {

struct IntPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
};

struct IntLine {
    std::int64_t a = 0; // y = a x + b
    std::int64_t b = 0;
    friend auto operator<=>(const IntLine&, const IntLine&) = default;
};

// Exact integer point-line arrangement; no duplicate points or lines.
struct IntArrangement {
    std::vector<IntPoint> points;
    std::vector<IntLine> lines;
};

bool has_duplicates(const IntArrangement& arr);

struct IncidenceReport {
    std::uint64_t points_n = 0;
    std::uint64_t lines_m = 0;
    std::uint64_t incidences = 0;
    double st_ratio = 0.0; // I / (N^(2/3) M^(2/3) + N + M)
};

double st_denominator(std::uint64_t n, std::uint64_t m);

// Cartesian-product extremal arrangement: points [1..n] x [1..2n^2],
// lines a in [1..n], b in [1..n^2]. Every line meets exactly n grid
// columns, so I = n^4 with N = 2n^3, M = n^3. Overflow in the coordinate
// ranges throws std::overflow_error.
IntArrangement elekes(std::int64_t n);

// Exact count, grouping points by x and evaluating each line per column:
// O(M * columns * log) instead of O(N * M). Lines may be partitioned over
// `threads`; the integer total is identical for any thread count.
IncidenceReport count_incidences_exact(const IntArrangement& arr, int threads = 1);

// Exact O(N*M) pair scan through the scalar/SIMD kernels; the test oracle
// for count_incidences_exact.
std::uint64_t count_incidences_bruteforce(const IntArrangement& arr,
                                          IncidenceBackend backend = IncidenceBackend::Auto,
                                          int threads = 1);

// Image of an arrangement under one of the five maps.
struct MappedArrangement {
    std::vector<Vec2> image_points;
    std::vector<CurveTranslate> curves;
    IntArrangement source;
    MapId map = MapId::Parabola;
};

// Maps every point and line; domain violations throw map_domain_error
// identifying the offending element.
MappedArrangement map_arrangement(const IntArrangement& arr, MapId id);

// Two counts that must agree: the exact pullback count of the source
// arrangement, and the count of (image point, curve) pairs with implicit
// residual <= tol. A mismatch throws std::runtime_error listing
// disagreeing pairs.
struct CurveIncidenceCounts {
    IncidenceReport report;
    std::uint64_t pullback = 0;
    std::uint64_t residual = 0;
};

CurveIncidenceCounts count_curve_incidences(const MappedArrangement& m, double tol,
                                            int threads = 1);

struct StBoundResult {
    bool pass = false;
    double margin = 0.0; // c * denom - I
};

// Sanity bound I <= c * (N^(2/3) M^(2/3) + N + M).
StBoundResult st_bound_check(const IncidenceReport& report, double c);

} // namespace linecurve
