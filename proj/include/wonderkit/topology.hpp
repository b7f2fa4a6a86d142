// topology.hpp -- rotation loops lifted to the unit-quaternion double
// cover (the obstruction behind the string/belt demonstration), and
// linking numbers of closed polylines by signed crossings and by the
// discrete Gauss double sum.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wonderkit/numerics.hpp"

namespace wonderkit {

struct SamplingTooCoarseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotALoopError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateProjectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CurvesTouchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnitQuaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    static UnitQuaternion identity() { return {}; }
    static UnitQuaternion from_axis_angle(Vec3 axis, double angle);

    UnitQuaternion operator*(const UnitQuaternion& o) const;
    UnitQuaternion conjugate() const { return {w, -x, -y, -z}; }
    UnitQuaternion operator-() const { return {-w, -x, -y, -z}; }
    double dot(const UnitQuaternion& o) const {
        return w * o.w + x * o.x + y * o.y + z * o.z;
    }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    UnitQuaternion normalized() const;
    // Sign-canonical representative of the underlying rotation: first
    // nonzero component positive. Erases any lift information.
    UnitQuaternion canonical() const;
};

// Sampled path of rotations. Samples are stored sign-canonically, so a
// path fixes a curve in rotation space but not a lift; lift_path rebuilds
// the lift by continuity.
struct RotationPath {
    std::vector<UnitQuaternion> samples;
};

// Loop of rotations by angle 2*pi*n*t about a fixed axis, t in [0, 1],
// sampled at 16n + 16 steps.
RotationPath full_twists(int n, Vec3 axis = {0.0, 0.0, 1.0});

// Follow p, then q (both must be loops at the identity).
RotationPath concatenate(const RotationPath& p, const RotationPath& q);

// Continuous lift to unit quaternions starting at +1; returns the terminal
// sign: +1 for a contractible loop, -1 otherwise. Requires consecutive
// rotation increments below pi/2 (SamplingTooCoarseError) and identity
// endpoints (NotALoopError).
int lift_path(const RotationPath& path);

// Lift trace rows (t, w, x, y, z) for export.
std::vector<std::array<double, 5>> lift_trace(const RotationPath& path);

// Closed polyline in space; segments wrap around.
struct PLCurve {
    std::vector<Vec3> points;

    std::size_t size() const { return points.size(); }
    Vec3 at(std::size_t i) const { return points[i % points.size()]; }
};

void validate_curve(const PLCurve& c);

// Minimum distance between any two segments of the two curves.
double min_curve_distance(const PLCurve& a, const PLCurve& b);

// Seed constant behind the deterministic projection-direction sequence
// used by the crossing method (and any other randomized retry).
inline constexpr std::uint64_t kProjectionSeed = 0x9e3779b97f4a7c15ULL;

// Linking number by signed crossings over a generic projection; retries up
// to 20 deterministic directions before giving up. Also available through
// the Gauss double sum over segment pairs (exact solid-angle form, rounded
// to the nearest integer; residual > 0.1 reports undersampling).
int linking_number(const PLCurve& a, const PLCurve& b);
int linking_number_gauss(const PLCurve& a, const PLCurve& b);
double linking_number_gauss_raw(const PLCurve& a, const PLCurve& b);

// Three mutually orthogonal ellipses with semi-axes (1, 2), one per
// coordinate plane: pairwise unlinked, yet inseparable as a triple.
std::array<PLCurve, 3> borromean_rings(int samples_per_ring = 96);

}  // namespace wonderkit
