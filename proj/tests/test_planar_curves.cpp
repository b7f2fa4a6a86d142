#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wonderkit/planar_curves.hpp"

using namespace wonderkit;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

double polyline_length(const std::vector<Vec2>& pts, bool closed) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += distance(pts[i], pts[i + 1]);
    if (closed && !pts.empty()) len += distance(pts.back(), pts.front());
    return len;
}
}  // namespace

TEST_CASE("curvature of a ccw circle is +1/R, cw is -1/R") {
    CHECK(curvature(circle_curve({0, 0}, 2.0, true), 1.0) == doctest::Approx(0.5));
    CHECK(curvature(circle_curve({0, 0}, 2.0, false), 1.0) == doctest::Approx(-0.5));
    CHECK(curvature(circle_curve({5, -3}, 0.25, true), 2.0) == doctest::Approx(4.0));
}

TEST_CASE("curvature of a straight line is zero") {
    CHECK(std::abs(curvature(line_curve({0, 0}, {3, 4}), 0.5)) < 1e-12);
}

TEST_CASE("analytic and finite-difference curvature agree on circles") {
    // Strip the analytic derivatives to force the finite-difference path.
    for (double r : {0.5, 1.0, 2.0, 10.0}) {
        for (bool ccw : {true, false}) {
            PlaneCurve c = circle_curve({0, 0}, r, ccw);
            const double expected = (ccw ? 1.0 : -1.0) / r;
            PlaneCurve fd = c;
            fd.velocity = nullptr;
            fd.acceleration = nullptr;
            for (double t : {0.1, 1.0, 2.5, 4.0}) {
                CHECK(std::abs(curvature(fd, t) - expected) < 1e-6);
                CHECK(std::abs(curvature(c, t) - curvature(fd, t)) < 1e-6);
            }
        }
    }
}

TEST_CASE("logarithmic spiral curvature is sin(alpha)/r") {
    // b = 1 means alpha = arccot(1) = 45 deg, so kappa = 1/(r sqrt 2).
    PlaneCurve c = logarithmic(1.0, 1.0);
    c.velocity = nullptr;
    c.acceleration = nullptr;
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
        const double r = std::exp(t);
        CHECK(curvature(c, t) == doctest::Approx(1.0 / (r * std::sqrt(2.0))).epsilon(1e-6));
    }
}

TEST_CASE("curvature rejects a stalled parameterization") {
    PlaneCurve stalled;
    stalled.position = [](double) { return Vec2{1.0, 1.0}; };
    stalled.t_begin = 0.0;
    stalled.t_end = 1.0;
    CHECK_THROWS_AS(curvature(stalled, 0.5), DegenerateParameterizationError);
}

TEST_CASE("reuleaux triangle: 3 arcs of radius w spanning pi/3") {
    const ConvexBody body = reuleaux(3, 1.0);
    REQUIRE(body.boundary().size() == 3);
    for (const ArcSegment& a : body.boundary()) {
        CHECK(a.radius == doctest::Approx(1.0));
        CHECK(std::abs(a.sweep()) == doctest::Approx(kPi / 3.0));
    }
    for (int i = 0; i < 360; ++i)
        CHECK(width(body, Angle{kTau * i / 360.0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("odd reuleaux polygons have constant width") {
    for (int n : {3, 5, 7, 9}) {
        const double w = 1.0;
        const ConvexBody body = reuleaux(n, w);
        double wmin = 1e300, wmax = -1e300;
        for (int i = 0; i < 3600; ++i) {
            const double value = width(body, Angle{kPi * i / 3600.0});
            wmin = std::min(wmin, value);
            wmax = std::max(wmax, value);
        }
        CHECK(wmax - wmin <= 1e-9 * w);
        CHECK(wmin == doctest::Approx(w).epsilon(1e-9));
        CHECK(body.discretely_convex());
    }
}

TEST_CASE("reuleaux perimeter equals pi * width (numeric arc-length oracle)") {
    const ConvexBody body = reuleaux(5, 2.0);
    CHECK(body.perimeter() == doctest::Approx(kTau).epsilon(1e-12));
    // Independent oracle: polyline length of the sampled boundary.
    const double numeric = polyline_length(body.boundary_polyline(4000), true);
    CHECK(std::abs(numeric - kTau) < 1e-6);
}

TEST_CASE("reuleaux rejects even or tiny orders") {
    CHECK_THROWS_AS(reuleaux(4, 1.0), EvenOrderError);
    CHECK_THROWS_AS(reuleaux(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(reuleaux(3, -1.0), std::invalid_argument);
}

TEST_CASE("width of a circle and a rectangle") {
    const ConvexBody circle = ConvexBody::from_support([](double) { return 1.0; });
    for (double t : {0.0, 0.3, 2.0, 5.5})
        CHECK(width(circle, Angle{t}) == doctest::Approx(2.0));

    // 2x1 axis-aligned rectangle: half-extents 1 and 1/2.
    const ConvexBody rect = ConvexBody::from_support([](double t) {
        return std::abs(std::cos(t)) + 0.5 * std::abs(std::sin(t));
    });
    CHECK(width(rect, Angle{0.0}) == doctest::Approx(2.0));
    CHECK(width(rect, Angle{kPi / 2.0}) == doctest::Approx(1.0));
    CHECK(rect.discretely_convex());
}

TEST_CASE("rope gap: one metre of height needs 2 pi metres of rope") {
    CHECK(rope_extra(1.0) == doctest::Approx(kTau));
    CHECK(rope_gap(0.0) == doctest::Approx(0.0));
    CHECK(rope_gap(rope_extra(0.37)) == doctest::Approx(0.37));
    // No radius anywhere in the formula: same number for a marble and a planet.
    CHECK(rope_extra(1.0) == rope_extra(1.0));
    CHECK_THROWS_AS(rope_extra(std::nan("")), std::invalid_argument);
}

TEST_CASE("archimedean spiral: ray crossings spaced exactly 2 pi apart") {
    const PlaneCurve c = archimedean(0.0, 1.0, 0.0, 10.0 * kTau);
    // Crossings of the positive x-axis happen at t = 2 pi k with radius t.
    for (int k = 1; k < 9; ++k) {
        const Vec2 p = c.position(kTau * k);
        const Vec2 q = c.position(kTau * (k + 1));
        CHECK(std::abs(p.y) < 1e-9 * p.norm());
        CHECK(q.norm() - p.norm() == doctest::Approx(kTau).epsilon(1e-12));
    }
}

TEST_CASE("logarithmic spiral: ray crossings grow geometrically") {
    const double b = 0.19;
    const PlaneCurve c = logarithmic(1.0, b, 0.0, 8.0 * kTau);
    for (int k = 0; k < 7; ++k) {
        const Vec2 p = c.position(kTau * k);
        const Vec2 q = c.position(kTau * (k + 1));
        CHECK(q.norm() / p.norm() == doctest::Approx(std::exp(kTau * b)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(logarithmic(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("logarithmic spiral with b = 0 degenerates to a circle") {
    const PlaneCurve c = logarithmic(1.0, 0.0);
    for (double t : {0.0, 1.0, 4.0})
        CHECK(c.position(t).norm() == doctest::Approx(1.0));
}

TEST_CASE("tangent-radial angle: equiangular for log spirals, pi/2 on circles") {
    const double psi = Angle::from_degrees(80.0).radians;
    const PlaneCurve log80 = logarithmic(1.0, 1.0 / std::tan(psi), 0.0, 4.0 * kTau);
    double max_dev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double t = 4.0 * kTau * i / 100.0;
        max_dev = std::max(max_dev,
                           std::abs(tangent_radial_angle(log80, t).radians - psi));
    }
    CHECK(max_dev <= 1e-9);

    CHECK(tangent_radial_angle(circle_curve({0, 0}, 3.0), 1.0).radians ==
          doctest::Approx(kPi / 2.0));
}

TEST_CASE("tangent-radial angle on the archimedean spiral is arctan(theta)") {
    const PlaneCurve c = archimedean(0.0, 1.0, 0.1, 6.0 * kTau);
    double prev = 0.0;
    for (int i = 1; i <= 60; ++i) {
        const double t = 0.1 + (6.0 * kTau - 0.1) * i / 60.0;
        const double psi = tangent_radial_angle(c, t).radians;
        CHECK(psi == doctest::Approx(std::atan(t)).epsilon(1e-9));
        CHECK(psi > prev);  // strictly increasing: not equiangular
        prev = psi;
    }
    CHECK_THROWS_AS(tangent_radial_angle(archimedean(0.0, 1.0), 0.0),
                    DegenerateParameterizationError);
}

TEST_CASE("spider web: capture spacing, scaffold angle, frame shape") {
    const WebLayout web = spider_web(12, 8, 1.0);

    SUBCASE("capture spiral crosses each radial at equal spacing") {
        for (int r = 0; r < 12; ++r) {
            const double beta = kTau * r / 12.0;
            std::vector<double> radii;
            for (double t = beta; t < web.capture.t_end; t += kTau)
                radii.push_back(web.capture.position(t).norm());
            REQUIRE(radii.size() >= 3);
            const double spacing = radii[0] - radii[1];
            for (std::size_t i = 0; i + 1 < radii.size(); ++i)
                CHECK(radii[i] - radii[i + 1] == doctest::Approx(spacing).epsilon(1e-9));
        }
    }

    SUBCASE("scaffold spiral crosses every radial at the same angle") {
        const double expected = Angle::from_degrees(80.0).radians;
        for (int i = 0; i <= 50; ++i) {
            const double t =
                web.scaffold.t_begin +
                (web.scaffold.t_end - web.scaffold.t_begin) * i / 50.0;
            CHECK(std::abs(tangent_radial_angle(web.scaffold, t).radians - expected) <=
                  1e-9);
        }
    }

    SUBCASE("capture spiral stays inside the frame polygon") {
        const double inradius = std::cos(kPi / 12.0);
        for (const Vec2& p : web.capture.sample_points())
            CHECK(p.norm() <= inradius + 1e-12);
    }

    SUBCASE("all radials meet at the hub") {
        for (const auto& [from, to] : web.radials) {
            CHECK(from.norm() == doctest::Approx(0.0));
            CHECK(to.norm() == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("spider web with m = 3 is the bare Y plus a triangular frame") {
    const WebLayout web = spider_web(3, 1, 2.0);
    CHECK(web.frame.size() == 3);
    CHECK(web.y_threads.size() == 3);
    CHECK(web.anchors.size() == 3);
    for (const Vec2& a : web.anchors) CHECK(a.norm() == doctest::Approx(3.0));
    CHECK_THROWS_AS(spider_web(2, 1, 1.0), std::invalid_argument);
}

TEST_CASE("yin-yang divider: length pi R, tangent continuity, symmetry") {
    const double R = 2.0;
    const YinYang y = yin_yang(R);
    REQUIRE(y.divider.arcs.size() == 2);

    double length = 0.0;
    for (const ArcSegment& a : y.divider.arcs) length += a.length();
    CHECK(length == doctest::Approx(kPi * R).epsilon(1e-12));

    // Junction tangents, measured numerically from the sampled curve.
    const auto tangent_near = [&](double t, double dt) {
        const Vec2 p = y.divider.position(t);
        const Vec2 q = y.divider.position(t + dt);
        return (q - p).normalized();
    };
    // At the origin (t = 0.5): incoming and outgoing tangents agree.
    const Vec2 in = tangent_near(0.5 - 1e-6, 1e-7);
    const Vec2 out = tangent_near(0.5 + 1e-6, 1e-7);
    CHECK(in.dot(out) == doctest::Approx(1.0).epsilon(1e-4));
    // At (R, 0) the outer circle tangent is vertical, as is the divider's.
    CHECK(std::abs(tangent_near(1e-7, 1e-7).x) < 1e-4);

    // Congruence under a half turn: the divider maps onto itself reversed.
    for (int i = 0; i <= 32; ++i) {
        const double t = i / 32.0;
        const Vec2 p = y.divider.position(t);
        const Vec2 q = y.divider.position(1.0 - t);
        CHECK(q.x == doctest::Approx(-p.x).epsilon(1e-9));
        CHECK(q.y == doctest::Approx(-p.y).epsilon(1e-9));
    }
}

TEST_CASE("support-function convexity holds for constructed bodies") {
    for (int n : {3, 5, 7})
        CHECK(reuleaux(n, 1.0).discretely_convex());
}
