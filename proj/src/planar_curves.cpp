#include "wonderkit/planar_curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wonderkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

double wrap_nonnegative(double angle) {
    double r = std::fmod(angle, kTau);
    if (r < 0.0) r += kTau;
    return r;
}

Vec2 fd_velocity(const PlaneCurve& c, double t, double h) {
    const Vec2 p = c.position(t + h);
    const Vec2 m = c.position(t - h);
    return (p - m) / (2.0 * h);
}

Vec2 fd_acceleration(const PlaneCurve& c, double t, double h) {
    const Vec2 p = c.position(t + h);
    const Vec2 q = c.position(t);
    const Vec2 m = c.position(t - h);
    return (p - 2.0 * q + m) / (h * h);
}

void require_finite(Vec2 v, const char* what) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y))
        throw NonFiniteError(std::string(what) + ": non-finite point");
}

}  // namespace

std::vector<Vec2> PlaneCurve::sample_points() const {
    std::vector<Vec2> pts;
    const int n = std::max(samples, 2);
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = t_begin + (t_end - t_begin) * i / double(n - 1);
        pts.push_back(position(t));
    }
    return pts;
}

PlaneCurve line_curve(Vec2 from, Vec2 to) {
    PlaneCurve c;
    c.kind = CurveKind::line;
    c.position = [=](double t) { return from + (to - from) * t; };
    c.velocity = [=](double) { return to - from; };
    c.acceleration = [](double) { return Vec2{0.0, 0.0}; };
    c.t_begin = 0.0;
    c.t_end = 1.0;
    c.samples = 2;
    return c;
}

PlaneCurve circle_curve(Vec2 center, double radius, bool ccw) {
    if (!(radius > 0.0)) throw std::invalid_argument("circle_curve: radius must be positive");
    const double sign = ccw ? 1.0 : -1.0;
    PlaneCurve c;
    c.kind = CurveKind::circle;
    c.position = [=](double t) {
        return Vec2{center.x + radius * std::cos(sign * t),
                    center.y + radius * std::sin(sign * t)};
    };
    c.velocity = [=](double t) {
        return Vec2{-sign * radius * std::sin(sign * t),
                    sign * radius * std::cos(sign * t)};
    };
    c.acceleration = [=](double t) {
        return Vec2{-radius * std::cos(sign * t), -radius * std::sin(sign * t)};
    };
    c.t_begin = 0.0;
    c.t_end = kTau;
    c.arcs = {ArcSegment{center, radius, 0.0, sign * kTau}};
    return c;
}

PlaneCurve arc_chain_curve(std::vector<ArcSegment> arcs) {
    if (arcs.empty()) throw std::invalid_argument("arc_chain_curve: no arcs");
    std::vector<double> cumulative{0.0};
    for (const ArcSegment& a : arcs) cumulative.push_back(cumulative.back() + a.length());
    const double total = cumulative.back();

    PlaneCurve c;
    c.kind = CurveKind::arc_chain;
    c.arcs = arcs;
    c.t_begin = 0.0;
    c.t_end = 1.0;
    c.position = [arcs, cumulative, total](double t) {
        const double s = std::clamp(t, 0.0, 1.0) * total;
        std::size_t i = 0;
        while (i + 1 < arcs.size() && s > cumulative[i + 1]) ++i;
        const ArcSegment& a = arcs[i];
        const double local = a.length() > 0.0 ? (s - cumulative[i]) / a.length() : 0.0;
        return a.point_at(a.angle_begin + a.sweep() * local);
    };
    return c;
}

ConvexBody ConvexBody::from_arc_chain(std::vector<ArcSegment> arcs, int grid_size) {
    if (arcs.empty()) throw std::invalid_argument("ConvexBody: empty arc chain");
    if (grid_size < 8) throw std::invalid_argument("ConvexBody: grid too small");
    ConvexBody body;
    body.arcs_ = std::move(arcs);
    const auto chain = body.arcs_;  // owned copy for the closure
    body.support_fn_ = [chain](double theta) {
        const Vec2 u{std::cos(theta), std::sin(theta)};
        double best = -std::numeric_limits<double>::infinity();
        for (const ArcSegment& a : chain) {
            // The free support point of the full circle lies on this arc
            // only if its angle falls inside the arc's sweep.
            const double sweep = a.sweep();
            const double lo = sweep >= 0.0 ? a.angle_begin : a.angle_end;
            const double span = std::abs(sweep);
            if (wrap_nonnegative(theta - lo) <= span)
                best = std::max(best, a.center.dot(u) + a.radius);
            best = std::max(best, a.start().dot(u));
            best = std::max(best, a.end().dot(u));
        }
        return best;
    };
    body.samples_.resize(grid_size);
    for (int i = 0; i < grid_size; ++i)
        body.samples_[i] = body.support_fn_(kTau * i / grid_size);
    return body;
}

ConvexBody ConvexBody::from_support(std::function<double(double)> h, int grid_size) {
    if (!h) throw std::invalid_argument("ConvexBody: null support function");
    if (grid_size < 8) throw std::invalid_argument("ConvexBody: grid too small");
    ConvexBody body;
    body.support_fn_ = std::move(h);
    body.samples_.resize(grid_size);
    for (int i = 0; i < grid_size; ++i)
        body.samples_[i] = body.support_fn_(kTau * i / grid_size);
    return body;
}

double ConvexBody::support(double theta) const { return support_fn_(theta); }

double ConvexBody::perimeter() const {
    if (!arcs_.empty()) {
        double total = 0.0;
        for (const ArcSegment& a : arcs_) total += a.length();
        return total;
    }
    // Cauchy: perimeter = integral of h over a full turn; the grid is
    // uniform and periodic, so the rectangle rule is the trapezoid rule.
    double total = 0.0;
    for (double h : samples_) total += h;
    return total * kTau / static_cast<double>(samples_.size());
}

std::vector<Vec2> ConvexBody::boundary_polyline(int samples_per_arc) const {
    if (arcs_.empty())
        throw std::logic_error("boundary_polyline: body has no arc-chain boundary");
    std::vector<Vec2> pts;
    pts.reserve(arcs_.size() * static_cast<std::size_t>(samples_per_arc));
    for (const ArcSegment& a : arcs_) {
        for (int i = 0; i < samples_per_arc; ++i) {
            const double angle = a.angle_begin + a.sweep() * i / double(samples_per_arc);
            pts.push_back(a.point_at(angle));
        }
    }
    return pts;
}

bool ConvexBody::discretely_convex(double tol) const {
    const int n = grid_size();
    const double step = kTau / n;
    double scale = 0.0;
    for (double h : samples_) scale = std::max(scale, std::abs(h));
    for (int i = 0; i < n; ++i) {
        const double prev = samples_[(i + n - 1) % n];
        const double next = samples_[(i + 1) % n];
        const double second = (prev + next - 2.0 * samples_[i]) / (step * step);
        if (second + samples_[i] < -tol * std::max(scale, 1.0)) return false;
    }
    return true;
}

double curvature(const PlaneCurve& curve, double t, double fd_step_fraction) {
    Vec2 v, a;
    if (curve.velocity && curve.acceleration) {
        v = curve.velocity(t);
        a = curve.acceleration(t);
    } else {
        const double h = fd_step_fraction * (curve.t_end - curve.t_begin);
        if (!(h > 0.0)) throw std::invalid_argument("curvature: empty parameter range");
        v = fd_velocity(curve, t, h);
        a = fd_acceleration(curve, t, h);
    }
    require_finite(v, "curvature");
    require_finite(a, "curvature");
    const double speed = v.norm();
    if (speed < 1e-9)
        throw DegenerateParameterizationError("curvature: speed below tolerance");
    return v.cross(a) / (speed * speed * speed);
}

ConvexBody reuleaux(int n, double w, int grid_size) {
    if (n % 2 == 0)
        throw EvenOrderError("reuleaux: order must be odd, got " + std::to_string(n));
    if (n < 3) throw std::invalid_argument("reuleaux: order must be >= 3");
    if (!(w > 0.0)) throw std::invalid_argument("reuleaux: width must be positive");

    // Regular n-gon whose longest diagonal (the width) is w.
    const double circumradius = w / (2.0 * std::cos(kPi / (2.0 * n)));
    std::vector<Vec2> vertices(n);
    for (int k = 0; k < n; ++k) {
        const double angle = kTau * k / n + kPi / 2.0;
        vertices[k] = {circumradius * std::cos(angle), circumradius * std::sin(angle)};
    }

    // Arc k replaces the far side: radius w about vertex k, running between
    // the two opposite vertices. Consecutive arcs share endpoints, so the
    // chain closes up ccw.
    std::vector<ArcSegment> arcs;
    arcs.reserve(n);
    for (int k = 0; k < n; ++k) {
        const Vec2 c = vertices[k];
        const Vec2 from = vertices[(k + (n - 1) / 2) % n];
        const Vec2 to = vertices[(k + (n + 1) / 2) % n];
        const double a1 = (from - c).angle();
        const double sweep = wrap_nonnegative((to - c).angle() - a1);
        arcs.push_back(ArcSegment{c, w, a1, a1 + sweep});
    }
    return ConvexBody::from_arc_chain(std::move(arcs), grid_size);
}

double width(const ConvexBody& body, Angle theta) {
    return body.support(theta.radians) + body.support(theta.radians + kPi);
}

double rope_gap(double extra_circumference) {
    if (!std::isfinite(extra_circumference))
        throw std::invalid_argument("rope_gap: input must be finite");
    return extra_circumference / kTau;
}

double rope_extra(double height_gap) {
    if (!std::isfinite(height_gap))
        throw std::invalid_argument("rope_extra: input must be finite");
    return kTau * height_gap;
}

PlaneCurve archimedean(double a, double b, double theta_begin, double theta_end,
                       int samples) {
    PlaneCurve c;
    c.kind = CurveKind::archimedean;
    c.t_begin = theta_begin;
    c.t_end = theta_end;
    c.samples = samples;
    c.position = [=](double t) {
        const double r = a + b * t;
        return Vec2{r * std::cos(t), r * std::sin(t)};
    };
    c.velocity = [=](double t) {
        const double r = a + b * t;
        return Vec2{b * std::cos(t) - r * std::sin(t), b * std::sin(t) + r * std::cos(t)};
    };
    c.acceleration = [=](double t) {
        const double r = a + b * t;
        return Vec2{-2.0 * b * std::sin(t) - r * std::cos(t),
                    2.0 * b * std::cos(t) - r * std::sin(t)};
    };
    return c;
}

PlaneCurve logarithmic(double a, double b, double theta_begin, double theta_end,
                       int samples) {
    if (!(a > 0.0)) throw std::invalid_argument("logarithmic: scale a must be positive");
    PlaneCurve c;
    c.kind = CurveKind::logarithmic;
    c.t_begin = theta_begin;
    c.t_end = theta_end;
    c.samples = samples;
    c.position = [=](double t) {
        const double r = a * std::exp(b * t);
        return Vec2{r * std::cos(t), r * std::sin(t)};
    };
    c.velocity = [=](double t) {
        const double r = a * std::exp(b * t);
        return Vec2{r * (b * std::cos(t) - std::sin(t)), r * (b * std::sin(t) + std::cos(t))};
    };
    c.acceleration = [=](double t) {
        const double r = a * std::exp(b * t);
        return Vec2{r * ((b * b - 1.0) * std::cos(t) - 2.0 * b * std::sin(t)),
                    r * ((b * b - 1.0) * std::sin(t) + 2.0 * b * std::cos(t))};
    };
    return c;
}

Angle tangent_radial_angle(const PlaneCurve& curve, double t) {
    const Vec2 p = curve.position(t);
    require_finite(p, "tangent_radial_angle");
    if (p.norm() < 1e-12)
        throw DegenerateParameterizationError("tangent_radial_angle: point at the origin");
    Vec2 v;
    if (curve.velocity) {
        v = curve.velocity(t);
    } else {
        const double h = 1e-6 * (curve.t_end - curve.t_begin);
        v = fd_velocity(curve, t, h);
    }
    require_finite(v, "tangent_radial_angle");
    if (v.norm() < 1e-12)
        throw DegenerateParameterizationError("tangent_radial_angle: zero speed");
    return Angle{std::atan2(p.cross(v), p.dot(v))};
}

WebLayout spider_web(int radials, int rings, double frame_radius, Angle scaffold_angle) {
    if (radials < 3) throw std::invalid_argument("spider_web: need at least 3 radials");
    if (rings < 1) throw std::invalid_argument("spider_web: need at least 1 ring");
    if (!(frame_radius > 0.0))
        throw std::invalid_argument("spider_web: frame radius must be positive");

    WebLayout web;
    web.frame_radius = frame_radius;
    const Vec2 hub{0.0, 0.0};

    web.frame.reserve(radials);
    for (int k = 0; k < radials; ++k) {
        const double angle = kTau * k / radials;
        const Vec2 v{frame_radius * std::cos(angle), frame_radius * std::sin(angle)};
        web.frame.push_back(v);
        web.radials.push_back({hub, v});
    }

    const int anchor_ids[3] = {0, radials / 3, (2 * radials) / 3};
    for (int id : anchor_ids) {
        const Vec2 anchor = web.frame[id] * 1.5;
        web.anchors.push_back(anchor);
        web.y_threads.push_back({hub, anchor});
    }

    // Non-sticky scaffold: equiangular spiral climbing hub -> frame at the
    // given constant crossing angle.
    const double pitch = 1.0 / std::tan(scaffold_angle.radians);  // cot
    const double hub_radius = frame_radius / 20.0;
    const double theta_span = std::log(frame_radius / hub_radius) / pitch;
    web.scaffold = logarithmic(hub_radius, pitch, 0.0, theta_span,
                               std::max(512, 64 * rings));

    // Sticky capture spiral: evenly spaced turns frame -> hub, kept inside
    // the frame polygon by starting at its inradius.
    const double start = frame_radius * std::cos(kPi / radials) * 0.98;
    const double spacing = (start - hub_radius) / (kTau * rings);
    web.capture = archimedean(start, -spacing, 0.0, kTau * rings,
                              std::max(512, 64 * rings));
    return web;
}

YinYang yin_yang(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("yin_yang: radius must be positive");
    YinYang y;
    y.radius = R;
    y.outer = circle_curve({0.0, 0.0}, R, true);
    // Upper semicircle on the right, lower on the left; they join at the
    // origin and meet the outer circle at (+-R, 0) with matching tangents.
    y.divider = arc_chain_curve({ArcSegment{{R / 2.0, 0.0}, R / 2.0, 0.0, kPi},
                                 ArcSegment{{-R / 2.0, 0.0}, R / 2.0, 0.0, -kPi}});
    return y;
}

}  // namespace wonderkit
