// planar_curves.hpp -- plane-curve machinery: signed curvature, constant
// width bodies built from circular-arc chains, Archimedean and logarithmic
// spirals, spider-web synthesis, the yin-yang divider and the
// rope-around-a-sphere gap.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "wonderkit/numerics.hpp"

namespace wonderkit {

struct DegenerateParameterizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EvenOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CurveKind { generic, line, circle, archimedean, logarithmic, arc_chain };

// Circular arc, parameterized ccw when angle_end > angle_begin.
struct ArcSegment {
    Vec2 center;
    double radius = 1.0;
    double angle_begin = 0.0;
    double angle_end = 0.0;

    Vec2 point_at(double angle) const {
        return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
    }
    Vec2 start() const { return point_at(angle_begin); }
    Vec2 end() const { return point_at(angle_end); }
    double sweep() const { return angle_end - angle_begin; }
    double length() const { return radius * std::abs(sweep()); }
};

// Parametric plane curve over [t_begin, t_end], sampled at `samples` points
// when a polyline is needed. Analytic curves carry their kind plus first
// and second derivative closures so curvature can skip finite differences;
// arc-chain curves additionally carry their arcs for exact SVG emission.
struct PlaneCurve {
    std::function<Vec2(double)> position;
    double t_begin = 0.0;
    double t_end = 1.0;
    int samples = 512;
    CurveKind kind = CurveKind::generic;
    std::function<Vec2(double)> velocity;      // optional
    std::function<Vec2(double)> acceleration;  // optional
    std::vector<ArcSegment> arcs;              // nonempty iff kind == arc_chain/circle

    std::vector<Vec2> sample_points() const;
};

PlaneCurve line_curve(Vec2 from, Vec2 to);
PlaneCurve circle_curve(Vec2 center, double radius, bool ccw = true);
// Arc-chain curve; t in [0, 1] traverses the chain by arc length.
PlaneCurve arc_chain_curve(std::vector<ArcSegment> arcs);

// Planar convex region represented by its support function
//   h(theta) = max over the body of <x, (cos theta, sin theta)>,
// stored both as an exact evaluator and sampled on a uniform grid. Bodies
// built from arc chains keep the chain for exact geometry.
class ConvexBody {
public:
    static ConvexBody from_arc_chain(std::vector<ArcSegment> arcs, int grid_size = 3600);
    static ConvexBody from_support(std::function<double(double)> h, int grid_size = 3600);

    double support(double theta) const;
    const std::vector<double>& support_samples() const { return samples_; }
    int grid_size() const { return static_cast<int>(samples_.size()); }
    const std::vector<ArcSegment>& boundary() const { return arcs_; }

    // Exact arc-length sum for arc chains, trapezoidal integral of the
    // support function otherwise (Cauchy's formula).
    double perimeter() const;
    std::vector<Vec2> boundary_polyline(int samples_per_arc = 256) const;
    // Discrete convexity: h + h'' >= -tol on the sample grid.
    bool discretely_convex(double tol = 1e-6) const;

private:
    ConvexBody() = default;
    std::vector<ArcSegment> arcs_;
    std::function<double(double)> support_fn_;
    std::vector<double> samples_;
};

// Signed curvature at parameter t: positive when the curve turns
// anticlockwise, negative clockwise, zero on straight stretches. Analytic
// derivatives are used when the curve carries them; otherwise second-order
// central differences with step `fd_step_fraction` of the parameter range.
double curvature(const PlaneCurve& curve, double t, double fd_step_fraction = 1e-5);

// Constant-width body: n circular arcs (n odd, >= 3), each of radius w
// centred at the opposite vertex of the regular n-gon of diameter w.
ConvexBody reuleaux(int n, double w, int grid_size = 3600);

// h(theta) + h(theta + pi).
double width(const ConvexBody& body, Angle theta);

// Raising a closed loop of rope by height dh everywhere around a sphere
// needs exactly 2*pi*dh extra length, whatever the sphere's radius.
double rope_gap(double extra_circumference);  // -> height gap
double rope_extra(double height_gap);         // -> extra circumference

// r(theta) = a + b*theta over [theta_begin, theta_end].
PlaneCurve archimedean(double a, double b, double theta_begin = 0.0,
                       double theta_end = 6.0 * 3.14159265358979323846,
                       int samples = 512);
// r(theta) = a * exp(b*theta) over [theta_begin, theta_end]; a > 0.
PlaneCurve logarithmic(double a, double b, double theta_begin = 0.0,
                       double theta_end = 6.0 * 3.14159265358979323846,
                       int samples = 512);

// Angle psi between the tangent and the ray from the origin,
// tan(psi) = r / (dr/dtheta). Constant (= arccot b) exactly for the
// logarithmic spiral; strictly increasing for the Archimedean one.
Angle tangent_radial_angle(const PlaneCurve& curve, double t);

// Spider-web layout: three Y-threads to outer anchors, a frame polygon,
// m radial threads meeting at the hub, a logarithmic scaffold spiral
// running hub -> frame and an Archimedean capture spiral frame -> hub.
struct WebLayout {
    std::vector<Vec2> anchors;                    // 3 anchor points
    std::vector<std::pair<Vec2, Vec2>> y_threads; // hub -> anchor
    std::vector<Vec2> frame;                      // frame polygon vertices
    std::vector<std::pair<Vec2, Vec2>> radials;   // hub -> frame vertex
    PlaneCurve scaffold;                          // logarithmic
    PlaneCurve capture;                           // archimedean
    double frame_radius = 1.0;
};

WebLayout spider_web(int radials, int rings, double frame_radius,
                     Angle scaffold_angle = Angle::from_degrees(80.0));

// Circle of radius R split by two semicircles of radius R/2 centred at
// (+-R/2, 0); the divider meets the outer circle tangentially at (+-R, 0)
// and the two halves are congruent under a half turn.
struct YinYang {
    double radius = 1.0;
    PlaneCurve outer;    // full circle
    PlaneCurve divider;  // two-semicircle arc chain through the origin
};

YinYang yin_yang(double R);

}  // namespace wonderkit
