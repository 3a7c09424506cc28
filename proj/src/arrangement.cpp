#include "linecurve/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace linecurve {

namespace {

// Chunked fold with per-chunk integer partials combined in chunk order,
// so the total is independent of the thread count.
template <typename Fn>
std::uint64_t parallel_sum(std::size_t jobs, int threads, Fn&& per_range) {
    if (threads < 1) threads = 1;
    std::size_t nthreads = std::min<std::size_t>(threads, jobs ? jobs : 1);
    if (nthreads <= 1) return per_range(std::size_t{0}, jobs);
    std::vector<std::uint64_t> partial(nthreads, 0);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    std::size_t chunk = (jobs + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(jobs, lo + chunk);
        pool.emplace_back([&, t, lo, hi] { partial[t] = per_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error(std::string("integer overflow in ") + what);
    return r;
}

bool incident(const IntPoint& p, const IntLine& l) {
    return __int128(p.y) == __int128(l.a) * p.x + l.b;
}

} // namespace

bool has_duplicates(const IntArrangement& arr) {
    auto pts = arr.points;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return true;
    auto lns = arr.lines;
    std::sort(lns.begin(), lns.end());
    return std::adjacent_find(lns.begin(), lns.end()) != lns.end();
}

double st_denominator(std::uint64_t n, std::uint64_t m) {
    double dn = static_cast<double>(n), dm = static_cast<double>(m);
    return std::pow(dn, 2.0 / 3.0) * std::pow(dm, 2.0 / 3.0) + dn + dm;
}

IntArrangement elekes(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("elekes: n must be >= 1");
    std::int64_t n2 = checked_mul(n, n, "elekes grid");
    std::int64_t n3 = checked_mul(n2, n, "elekes grid");
    std::int64_t two_n3 = checked_mul(n3, 2, "elekes grid");
    checked_mul(n2, 2, "elekes grid"); // max y coordinate

    IntArrangement arr;
    arr.points.reserve(static_cast<std::size_t>(two_n3));
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 1; j <= 2 * n2; ++j) arr.points.push_back({i, j});
    arr.lines.reserve(static_cast<std::size_t>(n3));
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = 1; b <= n2; ++b) arr.lines.push_back({a, b});
    return arr;
}

IncidenceReport count_incidences_exact(const IntArrangement& arr, int threads) {
    std::unordered_map<std::int64_t, std::vector<std::int64_t>> columns;
    columns.reserve(arr.points.size());
    for (const auto& p : arr.points) columns[p.x].push_back(p.y);
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> cols(
        columns.begin(), columns.end());
    for (auto& [x, ys] : cols) std::sort(ys.begin(), ys.end());

    std::uint64_t total = parallel_sum(
        arr.lines.size(), threads, [&](std::size_t lo, std::size_t hi) {
            std::uint64_t count = 0;
            for (std::size_t j = lo; j < hi; ++j) {
                const __int128 a = arr.lines[j].a;
                const __int128 b = arr.lines[j].b;
                for (const auto& [x, ys] : cols) {
                    __int128 y = a * x + b;
                    if (y < ys.front() || y > ys.back()) continue;
                    auto y64 = static_cast<std::int64_t>(y);
                    auto [first, last] = std::equal_range(ys.begin(), ys.end(), y64);
                    count += static_cast<std::uint64_t>(last - first);
                }
            }
            return count;
        });

    IncidenceReport rep;
    rep.points_n = arr.points.size();
    rep.lines_m = arr.lines.size();
    rep.incidences = total;
    double denom = st_denominator(rep.points_n, rep.lines_m);
    rep.st_ratio = denom > 0.0 ? static_cast<double>(total) / denom : 0.0;
    return rep;
}

std::uint64_t count_incidences_bruteforce(const IntArrangement& arr,
                                          IncidenceBackend backend, int threads) {
    std::vector<std::int64_t> xs, ys, as, bs;
    xs.reserve(arr.points.size());
    ys.reserve(arr.points.size());
    for (const auto& p : arr.points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    as.reserve(arr.lines.size());
    bs.reserve(arr.lines.size());
    for (const auto& l : arr.lines) {
        as.push_back(l.a);
        bs.push_back(l.b);
    }
    return parallel_sum(as.size(), threads, [&](std::size_t lo, std::size_t hi) {
        return count_incidences_kernel(
            xs, ys, std::span<const std::int64_t>(as).subspan(lo, hi - lo),
            std::span<const std::int64_t>(bs).subspan(lo, hi - lo), backend);
    });
}

MappedArrangement map_arrangement(const IntArrangement& arr, MapId id) {
    MappedArrangement out;
    out.source = arr;
    out.map = id;
    out.image_points.reserve(arr.points.size());
    for (const auto& p : arr.points) {
        try {
            out.image_points.push_back(
                map_point(id, {static_cast<double>(p.x), static_cast<double>(p.y)}));
        } catch (const map_domain_error&) {
            std::ostringstream msg;
            msg << "map_arrangement: point (" << p.x << ", " << p.y
                << ") outside the domain of the " << to_string(id) << " map";
            throw map_domain_error(msg.str());
        }
    }
    out.curves.reserve(arr.lines.size());
    for (const auto& l : arr.lines) {
        try {
            out.curves.push_back(line_image_translate(
                id, {static_cast<double>(l.a), static_cast<double>(l.b)}));
        } catch (const map_domain_error&) {
            std::ostringstream msg;
            msg << "map_arrangement: line y = " << l.a << "x + " << l.b
                << " inadmissible for the " << to_string(id) << " map";
            throw map_domain_error(msg.str());
        }
    }
    return out;
}

CurveIncidenceCounts count_curve_incidences(const MappedArrangement& m, double tol,
                                            int threads) {
    if (m.image_points.size() != m.source.points.size() ||
        m.curves.size() != m.source.lines.size())
        throw std::invalid_argument("count_curve_incidences: inconsistent mapped arrangement");

    CurveIncidenceCounts out;
    out.pullback = count_incidences_exact(m.source, threads).incidences;
    out.residual = parallel_sum(
        m.curves.size(), threads, [&](std::size_t lo, std::size_t hi) {
            std::uint64_t count = 0;
            for (std::size_t j = lo; j < hi; ++j)
                for (const auto& q : m.image_points)
                    count += (translate_residual(m.curves[j], q) <= tol);
            return count;
        });

    if (out.pullback != out.residual) {
        // Locate the disagreeing pairs for the report.
        std::ostringstream msg;
        msg << "count_curve_incidences: pullback " << out.pullback << " != residual "
            << out.residual << " (tol " << tol << ");";
        int listed = 0;
        for (std::size_t j = 0; j < m.curves.size() && listed < 8; ++j)
            for (std::size_t i = 0; i < m.image_points.size() && listed < 8; ++i) {
                bool exact = incident(m.source.points[i], m.source.lines[j]);
                bool res = translate_residual(m.curves[j], m.image_points[i]) <= tol;
                if (exact != res) {
                    msg << " [point " << i << ", line " << j << ": exact=" << exact
                        << " residual=" << res << "]";
                    ++listed;
                }
            }
        throw std::runtime_error(msg.str());
    }

    out.report.points_n = m.image_points.size();
    out.report.lines_m = m.curves.size();
    out.report.incidences = out.pullback;
    double denom = st_denominator(out.report.points_n, out.report.lines_m);
    out.report.st_ratio =
        denom > 0.0 ? static_cast<double>(out.pullback) / denom : 0.0;
    return out;
}

StBoundResult st_bound_check(const IncidenceReport& report, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("st_bound_check: c must be > 0");
    double bound = c * st_denominator(report.points_n, report.lines_m);
    double margin = bound - static_cast<double>(report.incidences);
    return {margin >= 0.0, margin};
}

} // namespace linecurve
