#include "linecurve/actions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "linecurve/rng.hpp"

namespace linecurve {

std::string to_string(ActionCase c) {
    switch (c) {
        case ActionCase::A1: return "A1";
        case ActionCase::A2: return "A2";
        case ActionCase::A3Rotations: return "A3";
        case ActionCase::A4Parabola: return "A4";
        case ActionCase::A5Identity: return "A5";
        case ActionCase::A6Log: return "A6";
    }
    return "?";
}

ActionCase action_case_from_string(const std::string& name) {
    for (ActionCase c : kAllActionCases)
        if (to_string(c) == name) return c;
    throw std::invalid_argument("unknown action case: " + name +
                                " (expected A1..A6)");
}

namespace {

constexpr double kPi = std::numbers::pi;

// Exact IEEE reduction into [-pi, pi]; leaves small angles untouched so
// cos/sin arguments match the caller's exactly there.
double reduce_angle(double t) {
    return std::fabs(t) > kPi ? std::remainder(t, 2.0 * kPi) : t;
}

} // namespace

Mat3 action_matrix(ActionCase c, TranslationVec v) {
    if (!std::isfinite(v.s) || !std::isfinite(v.t))
        throw std::invalid_argument("action_matrix: non-finite translation");
    const double s = v.s, t = v.t;
    switch (c) {
        case ActionCase::A5Identity:
            return Mat3({1, 0, s,
                         0, 1, t,
                         0, 0, 1});
        case ActionCase::A4Parabola:
            return Mat3({1, 0, s,
                         s, 1, t + s * s / 2.0,
                         0, 0, 1});
        case ActionCase::A6Log: {
            double es = std::exp(s);
            return Mat3({es, 0, es - 1.0,
                         0,  1, t,
                         0,  0, 1});
        }
        case ActionCase::A1: {
            double es = std::exp(s), et = std::exp(t);
            return Mat3({es,              0,       es - 1.0,
                         es * (et - 1.0), es * et, es * (et - 1.0),
                         0,               0,       1});
        }
        case ActionCase::A2: {
            double es = std::exp(s);
            return Mat3({es,     0,  es - 1.0,
                         es * t, es, es * t,
                         0,      0,  1});
        }
        case ActionCase::A3Rotations: {
            // Rotation-scaling about the fixed point (1,0). The published
            // form of this matrix has the two rotation entries' signs
            // swapped, which breaks A(v)A(w)=A(v+w); this variant is the
            // one consistent with the last column and with phi below.
            double es = std::exp(s);
            double ang = reduce_angle(t);
            double ct = std::cos(ang), st = std::sin(ang);
            return Mat3({es * ct,  es * st, 1.0 - es * ct,
                         -es * st, es * ct, es * st,
                         0,        0,       1});
        }
    }
    throw std::logic_error("action_matrix: unreachable");
}

Vec2 action_apply(ActionCase c, TranslationVec v, Vec2 p) {
    Mat3 a = action_matrix(c, v);
    return {a(0, 0) * p.x + a(0, 1) * p.y + a(0, 2),
            a(1, 0) * p.x + a(1, 1) * p.y + a(1, 2)};
}

GeneratorPair generators(ActionCase c) {
    switch (c) {
        case ActionCase::A5Identity:
            return {Mat3({0, 0, 1, 0, 0, 0, 0, 0, 0}),
                    Mat3({0, 0, 0, 0, 0, 1, 0, 0, 0})};
        case ActionCase::A4Parabola:
            return {Mat3({0, 0, 1, 1, 0, 0, 0, 0, 0}),
                    Mat3({0, 0, 0, 0, 0, 1, 0, 0, 0})};
        case ActionCase::A6Log:
            return {Mat3({1, 0, 1, 0, 0, 0, 0, 0, 0}),
                    Mat3({0, 0, 0, 0, 0, 1, 0, 0, 0})};
        case ActionCase::A1:
            return {Mat3({1, 0, 1, 0, 1, 0, 0, 0, 0}),
                    Mat3({0, 0, 0, 1, 1, 1, 0, 0, 0})};
        case ActionCase::A2:
            return {Mat3({1, 0, 1, 0, 1, 0, 0, 0, 0}),
                    Mat3({0, 0, 0, 1, 0, 1, 0, 0, 0})};
        case ActionCase::A3Rotations:
            return {Mat3({1, 0, -1, 0, 1, 0, 0, 0, 0}),
                    Mat3({0, 1, 0, -1, 0, 1, 0, 0, 0})};
    }
    throw std::logic_error("generators: unreachable");
}

Vec2 phi_inverse_from_action(ActionCase c, TranslationVec v) {
    Mat3 a = action_matrix(c, v);
    return {a(0, 2), a(1, 2)};
}

PlanarMap build_phi(ActionCase c) {
    PlanarMap map;
    map.action = c;
    auto check = [c](bool ok, Vec2 p, const char* which) {
        if (!ok) {
            std::ostringstream msg;
            msg << "phi[" << to_string(c) << "] " << which << ": point (" << p.x
                << ", " << p.y << ") outside domain";
            throw std::domain_error(msg.str());
        }
    };
    switch (c) {
        case ActionCase::A5Identity:
            map.forward_domain = [](Vec2 p) { return p.finite(); };
            map.inverse_domain = map.forward_domain;
            map.forward = [](Vec2 p) { return p; };
            map.inverse = [](Vec2 p) { return p; };
            break;
        case ActionCase::A4Parabola:
            map.forward_domain = [](Vec2 p) { return p.finite(); };
            map.inverse_domain = map.forward_domain;
            map.forward = [](Vec2 p) { return Vec2{p.x, p.y - p.x * p.x / 2.0}; };
            map.inverse = [](Vec2 p) { return Vec2{p.x, p.y + p.x * p.x / 2.0}; };
            break;
        case ActionCase::A6Log:
            map.forward_domain = [](Vec2 p) { return p.finite() && p.x > -1.0; };
            map.inverse_domain = [](Vec2 p) { return p.finite(); };
            map.forward = [check, dom = map.forward_domain](Vec2 p) {
                check(dom(p), p, "forward");
                return Vec2{std::log(p.x + 1.0), p.y};
            };
            map.inverse = [](Vec2 p) { return Vec2{std::expm1(p.x), p.y}; };
            break;
        case ActionCase::A1:
            map.forward_domain = [](Vec2 p) {
                return p.finite() && p.x > -1.0 && 1.0 + p.y / (p.x + 1.0) > 0.0;
            };
            map.inverse_domain = [](Vec2 p) { return p.finite(); };
            map.forward = [check, dom = map.forward_domain](Vec2 p) {
                check(dom(p), p, "forward");
                return Vec2{std::log(p.x + 1.0), std::log1p(p.y / (p.x + 1.0))};
            };
            map.inverse = [](Vec2 p) {
                double es = std::exp(p.x);
                return Vec2{es - 1.0, es * std::expm1(p.y)};
            };
            break;
        case ActionCase::A2:
            map.forward_domain = [](Vec2 p) { return p.finite() && p.x > -1.0; };
            map.inverse_domain = [](Vec2 p) { return p.finite(); };
            map.forward = [check, dom = map.forward_domain](Vec2 p) {
                check(dom(p), p, "forward");
                return Vec2{std::log(p.x + 1.0), p.y / (p.x + 1.0)};
            };
            map.inverse = [](Vec2 p) {
                double es = std::exp(p.x);
                return Vec2{es - 1.0, es * p.y};
            };
            break;
        case ActionCase::A3Rotations:
            // Principal arctan branch: angles stay in (-pi/2, pi/2), which
            // pins the forward domain to x < 1 and the inverse domain to
            // |t| < pi/2.
            map.forward_domain = [](Vec2 p) { return p.finite() && p.x < 1.0; };
            map.inverse_domain = [](Vec2 p) {
                return p.finite() && std::fabs(p.y) < kPi / 2.0;
            };
            map.forward = [check, dom = map.forward_domain](Vec2 p) {
                check(dom(p), p, "forward");
                double rx = 1.0 - p.x;
                return Vec2{0.5 * std::log(rx * rx + p.y * p.y),
                            std::atan(p.y / rx)};
            };
            map.inverse = [check, dom = map.inverse_domain](Vec2 p) {
                check(dom(p), p, "inverse");
                double es = std::exp(p.x);
                return Vec2{1.0 - es * std::cos(p.y), es * std::sin(p.y)};
            };
            break;
    }
    return map;
}

double verify_conjugation(ActionCase c, std::span<const ConjugationSample> samples) {
    PlanarMap phi = build_phi(c);
    double worst = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const auto& smp = samples[i];
        if (!phi.forward_domain(smp.point)) {
            std::ostringstream msg;
            msg << "verify_conjugation[" << to_string(c) << "]: sample " << i
                << " outside phi domain";
            throw std::domain_error(msg.str());
        }
        Vec2 shifted = phi.forward(smp.point) + Vec2{smp.shift.s, smp.shift.t};
        if (!phi.inverse_domain(shifted)) {
            std::ostringstream msg;
            msg << "verify_conjugation[" << to_string(c) << "]: sample " << i
                << " leaves the inverse domain";
            throw std::domain_error(msg.str());
        }
        Vec2 lhs = phi.inverse(shifted);
        Vec2 rhs = action_apply(c, smp.shift, smp.point);
        worst = std::fmax(worst, (lhs - rhs).norm());
    }
    return worst;
}

double verify_homomorphism(ActionCase c,
                           std::span<const std::pair<TranslationVec, TranslationVec>> samples) {
    double worst = 0.0;
    for (const auto& [v, w] : samples) {
        Mat3 lhs = action_matrix(c, v) * action_matrix(c, w);
        Mat3 rhs = action_matrix(c, {v.s + w.s, v.t + w.t});
        worst = std::fmax(worst, (lhs - rhs).frobenius());
    }
    return worst;
}

std::vector<ConjugationSample> random_conjugation_samples(ActionCase c, Rng& rng,
                                                          int count) {
    std::vector<ConjugationSample> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        ConjugationSample smp;
        switch (c) {
            case ActionCase::A5Identity:
            case ActionCase::A4Parabola:
                smp.point = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
                smp.shift = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
                break;
            case ActionCase::A6Log:
            case ActionCase::A2:
                smp.point = {rng.uniform(-0.5, 2), rng.uniform(-2, 2)};
                smp.shift = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
                break;
            case ActionCase::A1:
                smp.point = {rng.uniform(0, 1), rng.uniform(0, 1)};
                smp.shift = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
                break;
            case ActionCase::A3Rotations:
                // |arctan(y/(1-x))| <= 0.675 here, so adding |t| < 0.35
                // keeps every angle inside (-pi/2, pi/2).
                smp.point = {rng.uniform(-1, 0.5), rng.uniform(-0.4, 0.4)};
                smp.shift = {rng.uniform(-0.5, 0.5), rng.uniform(-0.35, 0.35)};
                break;
        }
        out.push_back(smp);
    }
    return out;
}

std::vector<std::pair<TranslationVec, TranslationVec>> random_translation_pairs(Rng& rng,
                                                                                int count) {
    std::vector<std::pair<TranslationVec, TranslationVec>> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back({{rng.uniform(-2, 2), rng.uniform(-2, 2)},
                       {rng.uniform(-2, 2), rng.uniform(-2, 2)}});
    return out;
}

} // namespace linecurve
