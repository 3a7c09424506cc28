#include "linecurve/curve_maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace linecurve {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void inadmissible(MapId id, Line line, const char* what) {
    std::ostringstream msg;
    msg << to_string(id) << " map: line y = " << line.a << "x + " << line.b
        << " inadmissible (" << what << ")";
    throw map_domain_error(msg.str());
}

[[noreturn]] void degenerate(MapId id, Line line, const char* what) {
    std::ostringstream msg;
    msg << to_string(id) << " map: line y = " << line.a << "x + " << line.b
        << " degenerates to a horizontal line (" << what << ")";
    throw degenerate_line_error(msg.str());
}

[[noreturn]] void out_of_domain(MapId id, Vec2 p) {
    std::ostringstream msg;
    msg << to_string(id) << " map: point (" << p.x << ", " << p.y
        << ") outside domain";
    throw map_domain_error(msg.str());
}

} // namespace

std::string to_string(MapId id) {
    switch (id) {
        case MapId::Parabola: return "parabola";
        case MapId::Log: return "log";
        case MapId::Softplus: return "softplus";
        case MapId::NegExp: return "negexp";
        case MapId::ComplexLog: return "complexlog";
    }
    return "?";
}

MapId map_id_from_string(const std::string& name) {
    for (MapId id : kAllMapIds)
        if (to_string(id) == name) return id;
    throw std::invalid_argument(
        "unknown map: " + name +
        " (expected parabola|log|softplus|negexp|complexlog)");
}

std::string to_string(const CurveFamily& f) {
    switch (f.kind) {
        case CurveFamily::Kind::Parabola: {
            std::ostringstream s;
            s << "Parabola(" << f.coeff << ")";
            return s.str();
        }
        case CurveFamily::Kind::LogCurve: return "LogCurve";
        case CurveFamily::Kind::NegExpCurve: return "NegExpCurve";
        case CurveFamily::Kind::SoftplusNegCurve: return "SoftplusNegCurve";
        case CurveFamily::Kind::ComplexLogCurve: return "ComplexLogCurve";
    }
    return "?";
}

CurveFamily curve_family_from_string(const std::string& name) {
    if (name == "LogCurve") return CurveFamily::log_curve();
    if (name == "NegExpCurve") return CurveFamily::neg_exp();
    if (name == "SoftplusNegCurve") return CurveFamily::softplus_neg();
    if (name == "ComplexLogCurve") return CurveFamily::complex_log();
    if (name == "Parabola") return CurveFamily::parabola(1.0);
    if (name.rfind("Parabola(", 0) == 0 && name.back() == ')')
        return CurveFamily::parabola(std::stod(name.substr(9, name.size() - 10)));
    throw std::invalid_argument("unknown curve family: " + name);
}

Vec2 CurveTranslate::total_shift() const {
    return {offset.x, offset.y + branch * kPi};
}

double family_residual(const CurveFamily& f, Vec2 c) {
    switch (f.kind) {
        case CurveFamily::Kind::Parabola:
            return c.y - f.coeff * c.x * c.x;
        case CurveFamily::Kind::LogCurve:
            return c.x > 0.0 ? c.y - std::log(c.x) : kInf;
        case CurveFamily::Kind::NegExpCurve:
            return c.y - std::exp(-c.x);
        case CurveFamily::Kind::SoftplusNegCurve:
            return std::expm1(c.y) * std::exp(c.x) - 1.0;
        case CurveFamily::Kind::ComplexLogCurve:
            return std::exp(c.x) * std::sin(c.y) - 1.0;
    }
    return kInf;
}

double translate_residual(const CurveTranslate& ct, Vec2 p) {
    return std::fabs(family_residual(ct.family, p - ct.total_shift()));
}

Vec2 map_point(MapId id, Vec2 p) {
    if (!p.finite()) out_of_domain(id, p);
    switch (id) {
        case MapId::Parabola:
            return {p.x, p.y + p.x * p.x};
        case MapId::Log:
            if (!(p.y > 0.0)) out_of_domain(id, p);
            return {p.x, std::log(p.y)};
        case MapId::Softplus:
            if (!(p.x > 0.0) || !(p.y / p.x > 0.0)) out_of_domain(id, p);
            return {std::log(p.x), std::log(p.y / p.x)};
        case MapId::NegExp:
            if (!(p.x > 0.0)) out_of_domain(id, p);
            return {std::log(p.x), p.y / p.x};
        case MapId::ComplexLog: {
            if (p.x == 1.0 && p.y == 0.0) out_of_domain(id, p);
            double rx = 1.0 - p.x;
            return {0.5 * std::log(rx * rx + p.y * p.y), std::atan2(p.y, rx)};
        }
    }
    out_of_domain(id, p);
}

Vec2 map_point_inverse(MapId id, Vec2 q) {
    if (!q.finite()) out_of_domain(id, q);
    switch (id) {
        case MapId::Parabola:
            return {q.x, q.y - q.x * q.x};
        case MapId::Log:
            return {q.x, std::exp(q.y)};
        case MapId::Softplus:
            return {std::exp(q.x), std::exp(q.x + q.y)};
        case MapId::NegExp:
            return {std::exp(q.x), std::exp(q.x) * q.y};
        case MapId::ComplexLog: {
            if (!(q.y > -kPi) || !(q.y <= kPi)) out_of_domain(id, q);
            double r = std::exp(q.x);
            return {1.0 - r * std::cos(q.y), r * std::sin(q.y)};
        }
    }
    out_of_domain(id, q);
}

CurveTranslate line_image_translate(MapId id, Line line) {
    if (!std::isfinite(line.a) || !std::isfinite(line.b))
        inadmissible(id, line, "non-finite coefficients");
    const double a = line.a, b = line.b;
    switch (id) {
        case MapId::Parabola:
            return {CurveFamily::parabola(1.0), {-a / 2.0, b - a * a / 4.0}, 0};
        case MapId::Log:
            if (a == 0.0 && b > 0.0) degenerate(id, line, "a = 0, image y = ln b");
            if (!(a > 0.0)) inadmissible(id, line, "requires a > 0");
            return {CurveFamily::log_curve(), {-b / a, std::log(a)}, 0};
        case MapId::Softplus:
            if (!(a > 0.0)) inadmissible(id, line, "requires a > 0");
            if (b == 0.0) degenerate(id, line, "b = 0, image y = ln a");
            if (!(b > 0.0)) inadmissible(id, line, "requires b > 0");
            return {CurveFamily::softplus_neg(), {std::log(b / a), std::log(a)}, 0};
        case MapId::NegExp:
            if (!(a > 0.0)) inadmissible(id, line, "requires a > 0");
            if (b == 0.0) degenerate(id, line, "b = 0, image y = a");
            if (!(b > 0.0)) inadmissible(id, line, "requires b > 0");
            return {CurveFamily::neg_exp(), {std::log(b), a}, 0};
        case MapId::ComplexLog: {
            if (a + b == 0.0)
                degenerate(id, line, "passes through the singular point (1,0)");
            // Along the line, 1-x+iy = (t - z0)(ia - 1); the constant
            // imaginary part of t - z0 is v0.
            double v0 = -(a + b) / (1.0 + a * a);
            double u = std::log(std::fabs(v0)) + 0.5 * std::log1p(a * a);
            double v = std::atan2(a, -1.0); // arg(ia - 1)
            return {CurveFamily::complex_log(), {u, v}, v0 > 0.0 ? 0 : -1};
        }
    }
    inadmissible(id, line, "unknown map");
}

Interval line_parameter_domain(MapId id, Line line) {
    switch (id) {
        case MapId::Parabola:
        case MapId::ComplexLog:
            return {-kInf, kInf};
        case MapId::Log:
            // y = a t + b > 0 with a > 0
            return {-line.b / line.a, kInf};
        case MapId::Softplus:
        case MapId::NegExp:
            return {0.0, kInf};
    }
    return {-kInf, kInf};
}

std::vector<Vec2> sample_line_image(MapId id, Line line, double t0, double t1, int count) {
    if (count < 2) throw std::invalid_argument("sample_line_image: count must be >= 2");
    if (!(t0 < t1)) throw std::invalid_argument("sample_line_image: empty range");
    Interval dom = line_parameter_domain(id, line);
    if (!(t0 > dom.lo) || !(t1 < dom.hi)) {
        std::ostringstream msg;
        msg << to_string(id) << " map: sample range [" << t0 << ", " << t1
            << "] leaves the mapped domain (" << dom.lo << ", " << dom.hi << ")";
        throw map_domain_error(msg.str());
    }
    if (id == MapId::ComplexLog && line.a + line.b == 0.0 && t0 <= 1.0 && 1.0 <= t1) {
        std::ostringstream msg;
        msg << "complexlog map: range [" << t0 << ", " << t1
            << "] crosses the t = 1 singularity of the line through (1,0)";
        throw map_domain_error(msg.str());
    }
    std::vector<Vec2> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        double t = t0 + (t1 - t0) * static_cast<double>(i) / (count - 1);
        out.push_back(map_point(id, {t, line.a * t + line.b}));
    }
    return out;
}

double verify_translate(MapId id, Line line, int count) {
    CurveTranslate ct = line_image_translate(id, line);
    Interval dom = line_parameter_domain(id, line);
    // Canonical window: width 6 starting a safe margin inside a finite
    // left end (the log-family residuals amplify rounding right at the
    // boundary).
    double t0, t1;
    if (std::isfinite(dom.lo)) {
        t0 = dom.lo + 0.05 * (1.0 + std::fabs(dom.lo));
        t1 = t0 + 6.0;
    } else {
        t0 = -3.0;
        t1 = 3.0;
    }
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        double t = t0 + (t1 - t0) * static_cast<double>(i) / (count > 1 ? count - 1 : 1);
        Vec2 image = map_point(id, {t, line.a * t + line.b});
        worst = std::fmax(worst, translate_residual(ct, image));
    }
    return worst;
}

CurveTranslate translate_from_two_points(const CurveFamily& f, Vec2 p1, Vec2 p2) {
    auto bad = [&](const char* what) -> CurveTranslate {
        std::ostringstream msg;
        msg << "translate_from_two_points[" << to_string(f)
            << "]: " << what;
        throw std::invalid_argument(msg.str());
    };
    switch (f.kind) {
        case CurveFamily::Kind::Parabola: {
            if (p1.x == p2.x) return bad("points share x");
            double u = 0.5 * (p1.x + p2.x) -
                       (p1.y - p2.y) / (2.0 * f.coeff * (p1.x - p2.x));
            double v = p1.y - f.coeff * (p1.x - u) * (p1.x - u);
            return {f, {u, v}, 0};
        }
        case CurveFamily::Kind::LogCurve: {
            double d = p1.y - p2.y;
            if (p1.x == p2.x || d == 0.0) return bad("points coincide along the curve");
            double u = p2.x - (p1.x - p2.x) / std::expm1(d);
            if (!(p1.x - u > 0.0)) return bad("inconsistent log points");
            double v = p1.y - std::log(p1.x - u);
            return {f, {u, v}, 0};
        }
        case CurveFamily::Kind::NegExpCurve: {
            double den = std::exp(-p1.x) - std::exp(-p2.x);
            double num = p1.y - p2.y;
            if (den == 0.0 || !(num / den > 0.0)) return bad("inconsistent points");
            double u = std::log(num / den);
            double v = p1.y - std::exp(-(p1.x - u));
            return {f, {u, v}, 0};
        }
        case CurveFamily::Kind::SoftplusNegCurve: {
            double rho = std::exp(p2.x - p1.x);
            double w = (1.0 - rho) / (std::exp(p1.y) - rho * std::exp(p2.y));
            if (!(w > 0.0)) return bad("inconsistent points");
            double v = -std::log(w);
            double arg = std::expm1(p1.y - v);
            if (!(arg > 0.0)) return bad("inconsistent points");
            double u = p1.x + std::log(arg);
            return {f, {u, v}, 0};
        }
        case CurveFamily::Kind::ComplexLogCurve: {
            double rho = std::exp(p1.x - p2.x);
            double num = std::sin(p2.y) - rho * std::sin(p1.y);
            double den = std::cos(p2.y) - rho * std::cos(p1.y);
            if (num == 0.0 && den == 0.0) return bad("points coincide along the curve");
            double v = std::atan2(num, den);
            if (!(std::sin(p1.y - v) > 0.0)) {
                v = v > 0.0 ? v - kPi : v + kPi; // the other mod-pi branch
            }
            double sv = std::sin(p1.y - v);
            if (!(sv > 0.0)) return bad("inconsistent points");
            double u = p1.x + std::log(sv);
            return {f, {u, v}, 0};
        }
    }
    return bad("unknown family");
}

} // namespace linecurve
