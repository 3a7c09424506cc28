#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "linecurve/vec.hpp"

namespace linecurve {

// The five planar maps whose line images are translates of one curve.
enum class MapId { Parabola, Log, Softplus, NegExp, ComplexLog };

constexpr MapId kAllMapIds[] = {MapId::Parabola, MapId::Log, MapId::Softplus,
                                MapId::NegExp, MapId::ComplexLog};

std::string to_string(MapId id);
MapId map_id_from_string(const std::string& name);

// Base curves, carried with their implicit residual R(x,y):
//   Parabola(c):      y - c*x^2
//   LogCurve:         y - ln x          (x > 0)
//   NegExpCurve:      y - e^-x
//   SoftplusNegCurve: (e^y - 1) e^x - 1 (the curve y = ln(1 + e^-x))
//   ComplexLogCurve:  e^x sin y - 1     (the image of t -> ln(t + i))
struct CurveFamily {
    enum class Kind { Parabola, LogCurve, NegExpCurve, SoftplusNegCurve, ComplexLogCurve };
    Kind kind = Kind::Parabola;
    double coeff = 1.0; // Parabola leading coefficient; unused otherwise

    static CurveFamily parabola(double c) { return {Kind::Parabola, c}; }
    static CurveFamily log_curve() { return {Kind::LogCurve, 1.0}; }
    static CurveFamily neg_exp() { return {Kind::NegExpCurve, 1.0}; }
    static CurveFamily softplus_neg() { return {Kind::SoftplusNegCurve, 1.0}; }
    static CurveFamily complex_log() { return {Kind::ComplexLogCurve, 1.0}; }
};

std::string to_string(const CurveFamily& f);
CurveFamily curve_family_from_string(const std::string& name);

// y = a*x + b. Vertical lines are outside this representation.
struct Line {
    double a = 0.0;
    double b = 0.0;
};

// Translate of a base curve: points p with R(p - offset - (0, branch*pi))
// = 0. branch is -1 or 0 and only used by ComplexLogCurve, where it
// reconciles images below the singular point with the single base curve.
struct CurveTranslate {
    CurveFamily family;
    Vec2 offset;
    int branch = 0;

    Vec2 total_shift() const;
};

// Implicit residual of the base curve at a point already corrected by the
// translate shift.
double family_residual(const CurveFamily& f, Vec2 corrected);

// |R(p - total_shift)| for this translate.
double translate_residual(const CurveTranslate& ct, Vec2 p);

// Point or line outside a map's domain.
class map_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Admissible-looking line whose image degenerates to a horizontal line
// instead of a translate of the family curve. Distinct from a plain
// domain violation so callers can treat it as a result kind.
class degenerate_line_error : public map_domain_error {
public:
    using map_domain_error::map_domain_error;
};

// Forward map. Domains: Parabola global; Log y > 0; Softplus x > 0 and
// y/x > 0; NegExp x > 0; ComplexLog (x,y) != (1,0) (principal branch).
Vec2 map_point(MapId id, Vec2 p);

// Closed-form inverse on the forward image.
Vec2 map_point_inverse(MapId id, Vec2 q);

// The translate the admissible line maps onto. Inadmissible lines throw
// map_domain_error; lines whose image is a horizontal line throw
// degenerate_line_error.
CurveTranslate line_image_translate(MapId id, Line line);

// t interval on which (t, a t + b) stays inside the map's domain;
// open-ended sides reported as +-infinity.
struct Interval {
    double lo;
    double hi;
};
Interval line_parameter_domain(MapId id, Line line);

// count >= 2 images of equally spaced t in [t0, t1]; the range must stay
// inside line_parameter_domain.
std::vector<Vec2> sample_line_image(MapId id, Line line, double t0, double t1, int count);

// Max |R| over `count` samples spread across the line's mapped domain.
double verify_translate(MapId id, Line line, int count);

// Recover the translate through two points of a family curve (closed form
// per family; for ComplexLogCurve the vertical offset is reduced to
// (-pi, pi] and reported with branch 0). Used to confirm offset
// uniqueness from samples.
CurveTranslate translate_from_two_points(const CurveFamily& f, Vec2 p1, Vec2 p2);

} // namespace linecurve
