// space_curves.hpp -- helices and their central projection, the swept
// shell surface over an equiangular spiral, and the root problem for the
// unique whorl-touching spiral angle.

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "wonderkit/mesh.hpp"
#include "wonderkit/numerics.hpp"
#include "wonderkit/planar_curves.hpp"

namespace wonderkit {

struct EyeOnCurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MultipleRootsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Handedness { right, left };

// Cylinder radius R, pitch rate c (height gained per radian of turn).
struct Helix {
    double radius = 1.0;
    double pitch_rate = 1.0;
    Handedness handedness = Handedness::right;
};

struct SpaceCurve {
    std::function<Vec3(double)> position;
    double t_begin = 0.0;
    double t_end = 1.0;
    int samples = 512;
};

// t -> (R cos t, +-R sin t, c t). The tangent meets every cylinder
// generator (the z-direction) at the constant angle
// arccos(c / sqrt(R^2 + c^2)).
SpaceCurve helix_curve(const Helix& h, double t_begin = 0.0,
                       double t_end = 8.0 * 3.14159265358979323846);

double helix_generator_angle(const Helix& h);

// Central projection from an eye at the origin on the axis onto the plane
// z = d. The image has polar radius rho(t) = d*R/(c*t) at polar angle
// +-t, so rho(t) * t is constant. Requires c*t > 0 over [t_begin, t_end].
PlaneCurve project_from_axis(const Helix& h, double plane_height,
                             double t_begin, double t_end, int samples = 512);

// Tube-ratio c(alpha) giving the literal curvature-circle radius,
// rho/r = 1/sin(alpha). Documented default for ShellParams; it admits no
// whorl-touching root (the tube is always too fat).
double curvature_tube_ratio(double alpha_radians);

// Swept-shell parameters over the spiral r(theta) = exp(theta * cot alpha):
// at each sample a circle of radius c(alpha)*r(theta) is placed in the
// meridian plane (spanned by the radial direction and the out-of-plane
// axis) and consecutive circles are skinned into a closed mesh.
struct ShellParams {
    Angle alpha = Angle::from_degrees(80.0);
    std::function<double(double)> tube_ratio = curvature_tube_ratio;
    int turns = 3;
    int samples_per_turn = 64;
    int circle_samples = 24;
};

struct ShellSurface {
    Mesh mesh;
    double gap = 0.0;               // whorl_gap at the shell's parameters
    bool self_intersecting = false; // gap < 0: layers overlap (not fatal)
    int samples_per_turn = 0;
    int circle_samples = 0;
};

ShellSurface shell_surface(const ShellParams& p);

// Gap between consecutive layers along any ray, in units of the inner
// layer's spiral radius: g = k(1-c) - (1+c) with k = exp(2 pi cot alpha).
// Zero means the outside of one whorl exactly fits the inside of the next;
// theta-independent by self-similarity.
double whorl_gap(Angle alpha, double c);

// Given a tube-ratio law alpha -> c, scans (1 deg, 89 deg) for sign changes
// of the gap and bisects the unique bracket. The deviation from half the
// golden angle is reported as a comparison only, never asserted.
struct TouchingAngleReport {
    std::optional<Angle> root;
    double gap_at_root = 0.0;
    Angle half_golden;
    std::optional<double> deviation_radians;  // root - half_golden
    int scan_sign_changes = 0;
};

TouchingAngleReport solve_touching_angle(const std::function<double(double)>& tube_ratio);

// The smaller arc after cutting the unit circle's circumference in golden
// ratio: 2 pi / phi^2 with phi = (1 + sqrt 5)/2.
Angle golden_angle();
Angle half_golden_angle();

}  // namespace wonderkit
