#include "wonderkit/space_curves.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace wonderkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

void check_helix(const Helix& h) {
    if (!(h.radius > 0.0)) throw std::invalid_argument("helix: radius must be positive");
    if (h.pitch_rate == 0.0 || !std::isfinite(h.pitch_rate))
        throw std::invalid_argument("helix: pitch rate must be nonzero and finite");
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < kPi / 2.0))
        throw std::invalid_argument("shell: alpha must lie in (0, pi/2)");
}

}  // namespace

SpaceCurve helix_curve(const Helix& h, double t_begin, double t_end) {
    check_helix(h);
    const double sign = h.handedness == Handedness::right ? 1.0 : -1.0;
    SpaceCurve c;
    c.t_begin = t_begin;
    c.t_end = t_end;
    c.position = [h, sign](double t) {
        return Vec3{h.radius * std::cos(t), sign * h.radius * std::sin(t),
                    h.pitch_rate * t};
    };
    return c;
}

double helix_generator_angle(const Helix& h) {
    check_helix(h);
    return std::acos(h.pitch_rate /
                     std::sqrt(h.radius * h.radius + h.pitch_rate * h.pitch_rate));
}

PlaneCurve project_from_axis(const Helix& h, double plane_height,
                             double t_begin, double t_end, int samples) {
    check_helix(h);
    if (!(plane_height > 0.0))
        throw std::invalid_argument("project_from_axis: plane height must be positive");
    if (!(h.pitch_rate * t_begin > 0.0) || !(h.pitch_rate * t_end > 0.0))
        throw EyeOnCurveError("project_from_axis: parameter range reaches the eye plane");

    const double sign = h.handedness == Handedness::right ? 1.0 : -1.0;
    const double R = h.radius;
    const double c0 = h.pitch_rate;
    PlaneCurve curve;
    curve.kind = CurveKind::generic;
    curve.t_begin = t_begin;
    curve.t_end = t_end;
    curve.samples = samples;
    curve.position = [=](double t) {
        const double scale = plane_height / (c0 * t);
        return Vec2{scale * R * std::cos(t), sign * scale * R * std::sin(t)};
    };
    // d/dt of (k cos t / t, +-k sin t / t) with k = d R / c.
    curve.velocity = [=](double t) {
        const double k = plane_height * R / c0;
        return Vec2{-k * (std::sin(t) * t + std::cos(t)) / (t * t),
                    sign * k * (std::cos(t) * t - std::sin(t)) / (t * t)};
    };
    return curve;
}

double curvature_tube_ratio(double alpha_radians) {
    check_alpha(alpha_radians);
    return 1.0 / std::sin(alpha_radians);
}

double whorl_gap(Angle alpha, double c) {
    check_alpha(alpha.radians);
    if (!(c > 0.0)) throw std::invalid_argument("whorl_gap: tube ratio must be positive");
    const double k = std::exp(kTau / std::tan(alpha.radians));
    return k * (1.0 - c) - (1.0 + c);
}

ShellSurface shell_surface(const ShellParams& p) {
    check_alpha(p.alpha.radians);
    if (p.turns < 1) throw std::invalid_argument("shell_surface: need at least one turn");
    if (p.samples_per_turn < 8 || p.circle_samples < 3)
        throw std::invalid_argument("shell_surface: sampling too coarse");

    const double cot_alpha = 1.0 / std::tan(p.alpha.radians);
    const double ratio = p.tube_ratio(p.alpha.radians);
    if (!(ratio > 0.0)) throw std::invalid_argument("shell_surface: tube ratio must be positive");

    ShellSurface shell;
    shell.gap = whorl_gap(p.alpha, ratio);
    shell.self_intersecting = shell.gap < 0.0;
    shell.samples_per_turn = p.samples_per_turn;
    shell.circle_samples = p.circle_samples;

    const int rings = p.turns * p.samples_per_turn + 1;
    const int m = p.circle_samples;
    Mesh& mesh = shell.mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(rings) * m + 2);

    // Ring of the tube at spiral angle theta: circle of radius c*r(theta)
    // in the meridian plane, centred on the spiral point.
    for (int i = 0; i < rings; ++i) {
        const double theta = kTau * i / p.samples_per_turn;
        const double r = std::exp(theta * cot_alpha);
        const Vec3 centre{r * std::cos(theta), r * std::sin(theta), 0.0};
        const Vec3 radial{std::cos(theta), std::sin(theta), 0.0};
        const Vec3 axial{0.0, 0.0, 1.0};
        for (int j = 0; j < m; ++j) {
            const double phi = kTau * j / m;
            const Vec3 offset = radial * (ratio * r * std::cos(phi)) +
                                axial * (ratio * r * std::sin(phi));
            mesh.vertices.push_back(centre + offset);
        }
    }

    // Skin consecutive rings with quads split into triangles, oriented
    // outward; the parameterization (theta, phi) is right-handed for that.
    auto vid = [m](int ring, int j) { return ring * m + (j % m); };
    for (int i = 0; i + 1 < rings; ++i) {
        for (int j = 0; j < m; ++j) {
            const int a = vid(i, j);
            const int b = vid(i + 1, j);
            const int c = vid(i + 1, j + 1);
            const int d = vid(i, j + 1);
            mesh.faces.push_back({a, b, c});
            mesh.faces.push_back({a, c, d});
        }
    }

    // Cap both ends with triangle fans so the result is a topological sphere.
    const int start_centre = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back(Vec3{std::exp(0.0), 0.0, 0.0});  // centre of first ring
    {
        const double theta = kTau * (rings - 1) / p.samples_per_turn;
        const double r = std::exp(theta * cot_alpha);
        mesh.vertices.push_back(Vec3{r * std::cos(theta), r * std::sin(theta), 0.0});
    }
    const int end_centre = start_centre + 1;
    for (int j = 0; j < m; ++j) {
        mesh.faces.push_back({start_centre, vid(0, j), vid(0, j + 1)});
        mesh.faces.push_back({end_centre, vid(rings - 1, j + 1), vid(rings - 1, j)});
    }
    return shell;
}

TouchingAngleReport solve_touching_angle(const std::function<double(double)>& tube_ratio) {
    if (!tube_ratio) throw std::invalid_argument("solve_touching_angle: null ratio law");

    TouchingAngleReport report;
    report.half_golden = half_golden_angle();

    const auto gap_at = [&](double alpha) {
        return whorl_gap(Angle{alpha}, tube_ratio(alpha));
    };

    // 0.1-degree scan over (1 deg, 89 deg); exactly one sign change may
    // survive, otherwise the law is rejected as ambiguous.
    const double lo = Angle::from_degrees(1.0).radians;
    const double hi = Angle::from_degrees(89.0).radians;
    const int steps = 880;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    int changes = 0;
    double prev_alpha = lo;
    bool prev_positive = gap_at(lo) > 0.0;
    for (int i = 1; i <= steps; ++i) {
        const double alpha = lo + (hi - lo) * i / steps;
        const bool positive = gap_at(alpha) > 0.0;
        if (positive != prev_positive) {
            ++changes;
            bracket_lo = prev_alpha;
            bracket_hi = alpha;
        }
        prev_alpha = alpha;
        prev_positive = positive;
    }
    report.scan_sign_changes = changes;
    if (changes > 1)
        throw MultipleRootsError("solve_touching_angle: " + std::to_string(changes) +
                                 " sign changes in the scan");
    if (changes == 0) return report;  // NoRoot

    Tolerance tol;
    tol.abs_tol = 1e-13;
    const auto root = bisect(gap_at, bracket_lo, bracket_hi, tol);
    if (!root) return report;
    report.root = Angle{*root};
    report.gap_at_root = gap_at(*root);
    report.deviation_radians = *root - report.half_golden.radians;
    return report;
}

Angle golden_angle() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return Angle{kTau / (phi * phi)};
}

Angle half_golden_angle() { return Angle{golden_angle().radians / 2.0}; }

}  // namespace wonderkit
