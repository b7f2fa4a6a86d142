#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wonderkit/topology.hpp"

using namespace wonderkit;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

PLCurve circle_in_xy(Vec3 centre, double radius, int samples = 96) {
    PLCurve c;
    for (int i = 0; i < samples; ++i) {
        const double t = kTau * i / samples;
        c.points.push_back(centre + Vec3{radius * std::cos(t), radius * std::sin(t), 0.0});
    }
    return c;
}

PLCurve hopf_partner(int samples = 96) {
    PLCurve c;
    for (int i = 0; i < samples; ++i) {
        const double t = kTau * i / samples;
        c.points.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
    }
    return c;
}

PLCurve rotated(const PLCurve& c, double angle, Vec3 shift) {
    PLCurve out;
    const double ca = std::cos(angle), sa = std::sin(angle);
    for (const Vec3& p : c.points)
        out.points.push_back(Vec3{ca * p.x - sa * p.z, p.y, sa * p.x + ca * p.z} + shift);
    return out;
}
}  // namespace

TEST_CASE("constant identity path lifts to +1") {
    RotationPath path;
    for (int i = 0; i < 20; ++i) path.samples.push_back(UnitQuaternion::identity());
    CHECK(lift_path(path) == +1);
}

TEST_CASE("single full twist lifts to -1, double twist to +1") {
    CHECK(lift_path(full_twists(1)) == -1);
    CHECK(lift_path(full_twists(2)) == +1);
}

TEST_CASE("lift endpoint is (-1)^n, by the concatenation oracle") {
    // Induction oracle: the (n+1)-twist loop is the n-twist loop followed
    // by a single twist, so endpoints must multiply.
    int expected = +1;
    for (int n = 0; n <= 6; ++n) {
        CHECK(lift_path(full_twists(n)) == expected);
        const RotationPath glued = concatenate(full_twists(n), full_twists(1));
        CHECK(lift_path(glued) == -expected);
        expected = -expected;
    }
}

TEST_CASE("lift endpoint does not depend on the twist axis") {
    for (int n = 0; n <= 4; ++n) {
        const int z = lift_path(full_twists(n, {0, 0, 1}));
        CHECK(lift_path(full_twists(n, {1, 0, 0})) == z);
        CHECK(lift_path(full_twists(n, {0, 1, 0})) == z);
        CHECK(lift_path(full_twists(n, {1, 1, 1})) == z);
    }
}

TEST_CASE("lift endpoint is stable under sampling refinement") {
    for (int n : {1, 2, 5}) {
        const RotationPath base = full_twists(n);
        RotationPath doubled;
        // Insert spherical midpoints between consecutive samples.
        for (std::size_t i = 0; i + 1 < base.samples.size(); ++i) {
            const UnitQuaternion a = base.samples[i];
            UnitQuaternion b = base.samples[i + 1];
            if (a.dot(b) < 0.0) b = -b;
            doubled.samples.push_back(a);
            doubled.samples.push_back(UnitQuaternion{a.w + b.w, a.x + b.x, a.y + b.y,
                                                     a.z + b.z}
                                          .normalized()
                                          .canonical());
        }
        doubled.samples.push_back(base.samples.back());
        CHECK(lift_path(doubled) == lift_path(base));
    }
}

TEST_CASE("lift rejects coarse sampling and open paths") {
    RotationPath coarse;
    for (int i = 0; i <= 3; ++i)
        coarse.samples.push_back(
            UnitQuaternion::from_axis_angle({0, 0, 1}, kTau * i / 3.0).canonical());
    CHECK_THROWS_AS(lift_path(coarse), SamplingTooCoarseError);

    RotationPath open;
    for (int i = 0; i <= 32; ++i)
        open.samples.push_back(
            UnitQuaternion::from_axis_angle({0, 0, 1}, 0.8 * kTau * i / 32.0).canonical());
    CHECK_THROWS_AS(lift_path(open), NotALoopError);
}

TEST_CASE("full twists paths satisfy the stated sampling rate") {
    for (int n : {0, 1, 4}) {
        const RotationPath p = full_twists(n);
        CHECK(p.samples.size() >= std::size_t(16 * n + 16));
    }
    CHECK_THROWS_AS(full_twists(-1), std::invalid_argument);
}

TEST_CASE("quaternion algebra sanity") {
    const UnitQuaternion i = UnitQuaternion::from_axis_angle({1, 0, 0}, std::numbers::pi);
    const UnitQuaternion j = UnitQuaternion::from_axis_angle({0, 1, 0}, std::numbers::pi);
    const UnitQuaternion k = i * j;
    CHECK(k.z == doctest::Approx(1.0));
    CHECK(k.w == doctest::Approx(0.0));
    CHECK((i * i).w == doctest::Approx(-1.0));
    CHECK(i.canonical().x > 0.0);
    CHECK((-i).canonical().x > 0.0);
}

TEST_CASE("linking number: split circles are unlinked") {
    const PLCurve a = circle_in_xy({0, 0, 0}, 1.0);
    const PLCurve b = circle_in_xy({10, 0, 0}, 1.0);
    CHECK(linking_number(a, b) == 0);
    CHECK(linking_number_gauss(a, b) == 0);
}

TEST_CASE("hopf link: both methods give the quadrature oracle's answer") {
    const PLCurve a = circle_in_xy({0, 0, 0}, 1.0);
    const PLCurve b = hopf_partner();

    const double oracle = oracles::gauss_link_quadrature(
        [](double t, double* p, double* tan) {
            p[0] = std::cos(t); p[1] = std::sin(t); p[2] = 0.0;
            tan[0] = -std::sin(t); tan[1] = std::cos(t); tan[2] = 0.0;
        },
        [](double t, double* p, double* tan) {
            p[0] = 1.0 + std::cos(t); p[1] = 0.0; p[2] = std::sin(t);
            tan[0] = -std::sin(t); tan[1] = 0.0; tan[2] = std::cos(t);
        },
        256);
    CHECK(oracle == doctest::Approx(-1.0).epsilon(1e-3));

    CHECK(linking_number(a, b) == -1);
    CHECK(linking_number_gauss(a, b) == -1);
    CHECK(std::abs(linking_number_gauss_raw(a, b) - (-1.0)) < 1e-9);
}

TEST_CASE("linking number is symmetric and rigid-motion invariant") {
    const PLCurve a = circle_in_xy({0, 0, 0}, 1.0);
    const PLCurve b = hopf_partner();
    CHECK(linking_number(a, b) == linking_number(b, a));
    CHECK(linking_number_gauss(a, b) == linking_number_gauss(b, a));

    const PLCurve ra = rotated(a, 0.7, {3, -2, 5});
    const PLCurve rb = rotated(b, 0.7, {3, -2, 5});
    CHECK(linking_number(ra, rb) == linking_number(a, b));
    CHECK(linking_number_gauss(ra, rb) == linking_number_gauss(a, b));
}

TEST_CASE("reversing one orientation flips the sign") {
    const PLCurve a = circle_in_xy({0, 0, 0}, 1.0);
    PLCurve b = hopf_partner();
    std::reverse(b.points.begin(), b.points.end());
    CHECK(linking_number(a, b) == +1);
    CHECK(linking_number_gauss(a, b) == +1);
}

TEST_CASE("touching curves are rejected") {
    const PLCurve a = circle_in_xy({0, 0, 0}, 1.0);
    const PLCurve b = circle_in_xy({2, 0, 0}, 1.0);  // touches at (1,0,0)
    CHECK_THROWS_AS(linking_number(a, b), CurvesTouchError);
}

TEST_CASE("borromean rings: pairwise unlinked but well separated") {
    const auto rings = borromean_rings();
    for (const PLCurve& r : rings) {
        validate_curve(r);
        CHECK(r.size() >= 64);
    }

    // well separated
    CHECK(min_curve_distance(rings[0], rings[1]) > 0.1);
    CHECK(min_curve_distance(rings[0], rings[2]) > 0.1);
    CHECK(min_curve_distance(rings[1], rings[2]) > 0.1);

    // planar, one per coordinate plane
    for (const Vec3& p : rings[0].points) CHECK(p.z == 0.0);
    for (const Vec3& p : rings[1].points) CHECK(p.x == 0.0);
    for (const Vec3& p : rings[2].points) CHECK(p.y == 0.0);

    // every pair unlinked, by both methods
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            CHECK(linking_number(rings[i], rings[j]) == 0);
            CHECK(linking_number_gauss(rings[i], rings[j]) == 0);
        }
    }
}

TEST_CASE("gauss residual guard trips on undersampled links") {
    // A 3-point "circle" near the partner is too coarse for the rounded
    // Gauss sum to be trustworthy; the residual check must speak up
    // rather than return a wrong integer silently.
    PLCurve coarse;
    coarse.points = {{1.4, 0.2, 0.0}, {-0.7, 0.1, 1.1}, {-0.8, -0.3, -1.2}};
    const PLCurve partner = circle_in_xy({0, 0, 0}, 1.0, 96);
    try {
        const int lk = linking_number_gauss(coarse, partner);
        // If it returns, it must agree with the crossing method.
        CHECK(lk == linking_number(coarse, partner));
    } catch (const SamplingTooCoarseError&) {
        // acceptable: the guard fired
    }
}

TEST_CASE("crossing and gauss methods agree on random loop soups") {
    // Hand-rolled generator: wobbly circles at random orientations and
    // offsets; any disjoint pair must get the same integer from both
    // methods, whatever that integer is.
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    const auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return double(state >> 11) * 0x1.0p-53;
    };
    const auto random_loop = [&] {
        PLCurve c;
        const double tilt = kTau * next();
        const double yaw = kTau * next();
        const Vec3 offset{2.0 * next() - 1.0, 2.0 * next() - 1.0, 2.0 * next() - 1.0};
        const double radius = 0.6 + next();
        const double wobble = 0.15 * next();
        const double ct = std::cos(tilt), st = std::sin(tilt);
        const double cy = std::cos(yaw), sy = std::sin(yaw);
        for (int i = 0; i < 72; ++i) {
            const double t = kTau * i / 72;
            const double r = radius * (1.0 + wobble * std::sin(3.0 * t));
            const Vec3 flat{r * std::cos(t), r * std::sin(t), 0.0};
            const Vec3 tilted{flat.x, ct * flat.y - st * flat.z, st * flat.y + ct * flat.z};
            c.points.push_back(Vec3{cy * tilted.x - sy * tilted.y,
                                    sy * tilted.x + cy * tilted.y, tilted.z} +
                               offset);
        }
        return c;
    };

    int compared = 0;
    for (int trial = 0; trial < 40 && compared < 20; ++trial) {
        const PLCurve a = random_loop();
        const PLCurve b = random_loop();
        if (min_curve_distance(a, b) < 0.05) continue;  // keep clearly disjoint pairs
        const int by_gauss = linking_number_gauss(a, b);
        const int by_crossings = linking_number(a, b);
        CHECK(by_crossings == by_gauss);
        ++compared;
    }
    CHECK(compared >= 20);
}

TEST_CASE("lift trace rows are unit quaternions marching to the endpoint") {
    const auto trace = lift_trace(full_twists(3));
    CHECK(trace.front()[1] == doctest::Approx(1.0));
    CHECK(trace.back()[1] == doctest::Approx(-1.0).epsilon(1e-9));
    for (const auto& row : trace) {
        const double norm = std::sqrt(row[1] * row[1] + row[2] * row[2] +
                                      row[3] * row[3] + row[4] * row[4]);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
    }
}
