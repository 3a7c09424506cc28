#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linecurve/mat3.hpp"

namespace linecurve {

// The six affine actions of the plane translation group, one per affine
// structure on the 2-dimensional commutative Lie algebra.
enum class ActionCase { A1, A2, A3Rotations, A4Parabola, A5Identity, A6Log };

constexpr std::array<ActionCase, 6> kAllActionCases = {
    ActionCase::A1,           ActionCase::A2,         ActionCase::A3Rotations,
    ActionCase::A4Parabola,   ActionCase::A5Identity, ActionCase::A6Log};

std::string to_string(ActionCase c);
ActionCase action_case_from_string(const std::string& name);

struct TranslationVec {
    double s = 0.0;
    double t = 0.0;
};

// A(s,t): the 3x3 affine matrix the translation (s,t) acts by. For
// A3Rotations the angle t is reduced modulo 2*pi (IEEE remainder, exact),
// making A(s, t+2k*pi) == A(s, t) whenever t+2k*pi is exactly
// representable.
Mat3 action_matrix(ActionCase c, TranslationVec v);

// First two rows of action_matrix applied to [x, y, 1].
Vec2 action_apply(ActionCase c, TranslationVec v, Vec2 p);

// Closed-form dA/ds and dA/dt at (0,0); both have zero bottom row and
// commute.
struct GeneratorPair {
    Mat3 xs;
    Mat3 xt;
};
GeneratorPair generators(ActionCase c);

// phi^-1(s,t) read off the last column of A(s,t).
Vec2 phi_inverse_from_action(ActionCase c, TranslationVec v);

// Forward/inverse pair with domain predicates. forward throws
// std::domain_error outside the forward domain, likewise inverse.
struct PlanarMap {
    ActionCase action = ActionCase::A5Identity;
    std::function<Vec2(Vec2)> forward;
    std::function<Vec2(Vec2)> inverse;
    std::function<bool(Vec2)> forward_domain;
    std::function<bool(Vec2)> inverse_domain;
};

// phi obtained by functionally inverting phi_inverse_from_action, so the
// conjugation identity holds by construction. Domains: A1/A2/A6 need
// x > -1 (A1 additionally 1 + y/(x+1) > 0); A3 needs x < 1 (principal
// arctan branch); A4/A5 are global.
PlanarMap build_phi(ActionCase c);

struct ConjugationSample {
    Vec2 point;
    TranslationVec shift;
};

// Max over samples of |phi^-1(phi(p) + (s,t)) - action_apply(c,(s,t),p)|.
// Samples outside the valid domains are reported via std::domain_error
// (index included), never skipped.
double verify_conjugation(ActionCase c, std::span<const ConjugationSample> samples);

// Max Frobenius norm of A(v)A(w) - A(v+w) over the sample pairs.
double verify_homomorphism(ActionCase c,
                           std::span<const std::pair<TranslationVec, TranslationVec>> samples);

class Rng;

// Seeded samples guaranteed valid for verify_conjugation: per-case boxes
// keep points inside phi's domain and translated images inside the
// inverse domain (for A3 all angles stay within (-pi/2, pi/2)).
std::vector<ConjugationSample> random_conjugation_samples(ActionCase c, Rng& rng,
                                                          int count);

// Seeded pairs in [-2,2]^4 for the homomorphism sweep.
std::vector<std::pair<TranslationVec, TranslationVec>> random_translation_pairs(Rng& rng,
                                                                                int count);

} // namespace linecurve
