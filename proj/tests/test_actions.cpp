#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "linecurve/actions.hpp"
#include "linecurve/cross_ratio.hpp"
#include "linecurve/homography.hpp"
#include "linecurve/rng.hpp"

using namespace linecurve;

namespace {

constexpr double kPi = std::numbers::pi;

Mat3 expect(std::array<double, 9> e) { return Mat3(e); }

// Central finite differences of the action matrix at the origin: the
// independent oracle for the closed-form generators.
GeneratorPair numeric_generators(ActionCase c, double h = 1e-5) {
    GeneratorPair g;
    g.xs = (action_matrix(c, {h, 0}) - action_matrix(c, {-h, 0})) * (0.5 / h);
    g.xt = (action_matrix(c, {0, h}) - action_matrix(c, {0, -h})) * (0.5 / h);
    return g;
}

} // namespace

TEST_CASE("action_matrix: displayed matrices") {
    CHECK((action_matrix(ActionCase::A4Parabola, {1, 0}) -
           expect({1, 0, 1, 1, 1, 0.5, 0, 0, 1}))
              .max_abs() == 0.0);
    CHECK((action_matrix(ActionCase::A5Identity, {3.25, -7}) -
           expect({1, 0, 3.25, 0, 1, -7, 0, 0, 1}))
              .max_abs() == 0.0);
    CHECK((action_matrix(ActionCase::A6Log, {std::log(2.0), 3}) -
           expect({2, 0, 1, 0, 1, 3, 0, 0, 1}))
              .max_abs() <= 1e-15);
    for (ActionCase c : kAllActionCases) {
        Mat3 a = action_matrix(c, {0.7, -0.3});
        CHECK(a(2, 0) == 0.0);
        CHECK(a(2, 1) == 0.0);
        CHECK(a(2, 2) == 1.0);
    }
}

TEST_CASE("action_apply") {
    Vec2 p = action_apply(ActionCase::A5Identity, {2.5, -1}, {3, 4});
    CHECK(p.x == 5.5);
    CHECK(p.y == 3.0);
    Vec2 q = action_apply(ActionCase::A4Parabola, {1, 0}, {0, 0});
    CHECK(q.x == 1.0);
    CHECK(q.y == 0.5);
    Vec2 r = action_apply(ActionCase::A6Log, {std::log(2.0), 1}, {1, 2});
    CHECK(r.x == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(r.y == 3.0);
}

TEST_CASE("generators: closed forms, finite-difference oracle, commutativity") {
    CHECK((generators(ActionCase::A5Identity).xs -
           expect({0, 0, 1, 0, 0, 0, 0, 0, 0}))
              .max_abs() == 0.0);
    CHECK((generators(ActionCase::A5Identity).xt -
           expect({0, 0, 0, 0, 0, 1, 0, 0, 0}))
              .max_abs() == 0.0);
    CHECK((generators(ActionCase::A4Parabola).xs -
           expect({0, 0, 1, 1, 0, 0, 0, 0, 0}))
              .max_abs() == 0.0);
    CHECK((generators(ActionCase::A4Parabola).xt -
           expect({0, 0, 0, 0, 0, 1, 0, 0, 0}))
              .max_abs() == 0.0);

    for (ActionCase c : kAllActionCases) {
        GeneratorPair g = generators(c);
        GeneratorPair fd = numeric_generators(c);
        CHECK((g.xs - fd.xs).max_abs() <= 1e-9);
        CHECK((g.xt - fd.xt).max_abs() <= 1e-9);
        for (int j = 0; j < 3; ++j) {
            CHECK(g.xs(2, j) == 0.0);
            CHECK(g.xt(2, j) == 0.0);
        }
        CHECK(commutator_norm(g.xs, g.xt) <= 1e-12);
    }
}

TEST_CASE("phi_inverse_from_action: last-column formulas") {
    Rng rng(42);
    for (int k = 0; k < 100; ++k) {
        double s = rng.uniform(-2, 2), t = rng.uniform(-2, 2);
        Vec2 a6 = phi_inverse_from_action(ActionCase::A6Log, {s, t});
        CHECK(a6.x == doctest::Approx(std::exp(s) - 1).epsilon(1e-14));
        CHECK(a6.y == t);
        Vec2 a1 = phi_inverse_from_action(ActionCase::A1, {s, t});
        CHECK(a1.x == doctest::Approx(std::exp(s) - 1).epsilon(1e-14));
        CHECK(a1.y ==
              doctest::Approx(std::exp(s) * (std::exp(t) - 1)).epsilon(1e-13));
        Vec2 a3 = phi_inverse_from_action(ActionCase::A3Rotations, {s, t});
        CHECK(a3.x ==
              doctest::Approx(1 - std::exp(s) * std::cos(t)).epsilon(1e-13));
        CHECK(a3.y == doctest::Approx(std::exp(s) * std::sin(t)).epsilon(1e-13));
        // phi^-1(s,t) = a(s,t)(0,0) by construction.
        for (ActionCase c : kAllActionCases) {
            Vec2 lhs = phi_inverse_from_action(c, {s, t});
            Vec2 rhs = action_apply(c, {s, t}, {0, 0});
            CHECK((lhs - rhs).norm() == 0.0);
        }
    }
}

TEST_CASE("build_phi: handpicked values") {
    auto a6 = build_phi(ActionCase::A6Log);
    Vec2 v = a6.forward({1, 7});
    CHECK(v.x == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(v.y == 7.0);

    auto a1 = build_phi(ActionCase::A1);
    Vec2 w = a1.forward({std::exp(1.0) - 1.0, 0});
    CHECK(w.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.y == 0.0);

    auto a4 = build_phi(ActionCase::A4Parabola);
    Vec2 u = a4.forward({2, 2});
    CHECK(u.x == 2.0);
    CHECK(u.y == 0.0);
}

TEST_CASE("build_phi: domain checks") {
    auto a6 = build_phi(ActionCase::A6Log);
    CHECK(!a6.forward_domain({-1.5, 0}));
    CHECK_THROWS_AS((void)a6.forward({-1.5, 0}), std::domain_error);
    auto a1 = build_phi(ActionCase::A1);
    CHECK(!a1.forward_domain({0, -2})); // 1 + y/(x+1) = -1
    CHECK_THROWS_AS((void)a1.forward({0, -2}), std::domain_error);
    auto a3 = build_phi(ActionCase::A3Rotations);
    CHECK(!a3.forward_domain({1, 0}));
    CHECK(!a3.forward_domain({2, 1}));
    CHECK(a3.forward_domain({0.5, -3}));
    CHECK(!a3.inverse_domain({0, 2})); // angle beyond pi/2
}

TEST_CASE("build_phi: round trip on 1000 domain samples per case") {
    for (ActionCase c : kAllActionCases) {
        auto phi = build_phi(c);
        Rng rng(42);
        auto samples = random_conjugation_samples(c, rng, 1000);
        double worst = 0.0;
        for (const auto& smp : samples) {
            Vec2 back = phi.inverse(phi.forward(smp.point));
            worst = std::fmax(worst, (back - smp.point).norm());
        }
        INFO("case ", to_string(c));
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("verify_conjugation") {
    Rng rng(42);
    auto idsamples = random_conjugation_samples(ActionCase::A5Identity, rng, 100);
    CHECK(verify_conjugation(ActionCase::A5Identity, idsamples) == 0.0);

    // Hand-checked A6 value: phi(1,2)=(ln2,2), +(ln2,1)=(2ln2,3),
    // phi^-1=(3,3) = A*(ln2,1).[1,2,1].
    ConjugationSample hand{{1, 2}, {std::log(2.0), 1}};
    double res = verify_conjugation(ActionCase::A6Log, std::span(&hand, 1));
    CHECK(res <= 1e-14);

    for (ActionCase c : kAllActionCases) {
        Rng r2(123);
        auto samples = random_conjugation_samples(c, r2, 1000);
        INFO("case ", to_string(c));
        CHECK(verify_conjugation(c, samples) <= 1e-8);
    }

    // Invalid samples are reported, not skipped.
    ConjugationSample bad{{-2, 0}, {0.1, 0.1}};
    CHECK_THROWS_AS((void)verify_conjugation(ActionCase::A6Log, std::span(&bad, 1)),
                    std::domain_error);
}

TEST_CASE("verify_homomorphism") {
    Rng rng(42);
    auto pairs = random_translation_pairs(rng, 1000);
    CHECK(verify_homomorphism(ActionCase::A5Identity, pairs) == 0.0);
    for (ActionCase c : kAllActionCases) {
        INFO("case ", to_string(c));
        CHECK(verify_homomorphism(c, pairs) <= 1e-9 * 60.0); // entries reach ~e^4
    }
    // A4 squared step: A(1,0)^2 matches A(2,0) entrywise.
    Mat3 sq = action_matrix(ActionCase::A4Parabola, {1, 0}) *
              action_matrix(ActionCase::A4Parabola, {1, 0});
    CHECK(sq(1, 0) == 2.0);
    CHECK(sq(1, 2) == 2.0);
    CHECK((sq - action_matrix(ActionCase::A4Parabola, {2, 0})).max_abs() == 0.0);
    // A3 pairs stay tight: pure angle-addition identities.
    CHECK(verify_homomorphism(ActionCase::A3Rotations, pairs) <= 1e-12);
}

TEST_CASE("A3 periodicity is exact on exactly-representable shifts") {
    // t on a coarse binary grid, so t + 2*pi carries no rounding of its
    // own and the remainder reduction recovers t bit-exactly.
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        double t = static_cast<double>(static_cast<int>(rng.below(4097)) - 2048) / 1024.0;
        double s = rng.uniform(-2, 2);
        Mat3 a = action_matrix(ActionCase::A3Rotations, {s, t});
        Mat3 b = action_matrix(ActionCase::A3Rotations, {s, t + 2 * kPi});
        Mat3 c = action_matrix(ActionCase::A3Rotations, {s, t - 2 * kPi});
        CHECK((a - b).max_abs() == 0.0);
        CHECK((a - c).max_abs() == 0.0);
    }
}

TEST_CASE("actions preserve cross-ratio of collinear quads") {
    Rng rng(9);
    for (ActionCase c : kAllActionCases) {
        TranslationVec v{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        auto map = [c, v](Vec2 p) { return action_apply(c, v, p); };
        std::vector<CollinearQuad> quads;
        for (int k = 0; k < 50; ++k) {
            Vec2 base{rng.uniform(-2, 2), rng.uniform(-2, 2)};
            Vec2 dir{rng.uniform(-1, 1), rng.uniform(-1, 1)};
            if (dir.norm() < 0.1) continue;
            quads.push_back(CollinearQuad::on_line(
                base, dir,
                {0.0, rng.uniform(0.5, 1.5), rng.uniform(2.0, 3.0), rng.uniform(3.5, 4.5)}));
        }
        INFO("case ", to_string(c));
        CHECK(verify_cross_ratio_preservation(map, quads, 1e-9) <= 1e-9);
    }
}

TEST_CASE("four samples of the action recover its matrix as a ProjMat") {
    Rng rng(31);
    std::array<Vec2, 4> src = {Vec2{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (ActionCase c : kAllActionCases) {
        for (int k = 0; k < 20; ++k) {
            TranslationVec v{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
            std::array<PointPair, 4> pairs;
            for (int i = 0; i < 4; ++i) pairs[i] = {src[i], action_apply(c, v, src[i])};
            ProjMat recovered = projective_from_correspondences(pairs);
            ProjMat truth(action_matrix(c, v));
            INFO("case ", to_string(c));
            CHECK(recovered.distance(truth) <= 1e-7);
        }
    }
}

TEST_CASE("case names round-trip") {
    for (ActionCase c : kAllActionCases)
        CHECK(action_case_from_string(to_string(c)) == c);
    CHECK_THROWS_AS((void)action_case_from_string("A9"), std::invalid_argument);
}
