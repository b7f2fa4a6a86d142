#include "wonderkit/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wonderkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

// Increment limit: consecutive rotations closer than pi/2 make the nearer
// lift unambiguous (|dot| stays above cos(pi/4)).
constexpr double kMinLiftDot = 0.70710678118654752;

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// splitmix64; deterministic across platforms, unlike the standard
// distributions.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Vec3 projection_direction(int attempt) {
    std::uint64_t state = kProjectionSeed;
    for (int i = 0; i <= attempt; ++i) splitmix64(state);
    std::uint64_t s = state;
    const double u = 2.0 * unit_double(splitmix64(s)) - 1.0;
    const double phi = kTau * unit_double(splitmix64(s));
    const double r = std::sqrt(std::max(0.0, 1.0 - u * u));
    return {r * std::cos(phi), r * std::sin(phi), u};
}

double segment_distance(Vec3 p1, Vec3 p2, Vec3 q1, Vec3 q2) {
    // Closest approach of two segments (clamped line-line).
    const Vec3 d1 = p2 - p1;
    const Vec3 d2 = q2 - q1;
    const Vec3 r = p1 - q1;
    const double a = d1.dot(d1), e = d2.dot(d2), f = d2.dot(r);
    double s = 0.0, t = 0.0;
    if (a <= 1e-30 && e <= 1e-30) {
        return r.norm();
    } else if (a <= 1e-30) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = d1.dot(r);
        if (e <= 1e-30) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = d1.dot(d2);
            const double denom = a * e - b * b;
            if (denom > 1e-30) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return ((p1 + d1 * s) - (q1 + d2 * t)).norm();
}

struct Projected {
    std::vector<Vec2> pts;
    std::vector<double> heights;
};

Projected project(const PLCurve& c, Vec3 e1, Vec3 e2, Vec3 dir) {
    Projected out;
    out.pts.reserve(c.size());
    out.heights.reserve(c.size());
    for (const Vec3& p : c.points) {
        out.pts.push_back({p.dot(e1), p.dot(e2)});
        out.heights.push_back(p.dot(dir));
    }
    return out;
}

int crossings_for_direction(const PLCurve& a, const PLCurve& b, Vec3 dir,
                            double scale) {
    Vec3 up{0.0, 0.0, 1.0};
    if (std::abs(dir.dot(up)) > 0.9) up = {1.0, 0.0, 0.0};
    const Vec3 e1 = dir.cross(up).normalized();
    const Vec3 e2 = dir.cross(e1);

    const Projected pa = project(a, e1, e2, dir);
    const Projected pb = project(b, e1, e2, dir);
    const double eps_param = 1e-9;
    const double eps_height = 1e-9 * scale;

    int signed_total = 0;
    const std::size_t na = a.size(), nb = b.size();
    for (std::size_t i = 0; i < na; ++i) {
        const Vec2 a1 = pa.pts[i], a2 = pa.pts[(i + 1) % na];
        const Vec2 u = a2 - a1;
        for (std::size_t j = 0; j < nb; ++j) {
            const Vec2 b1 = pb.pts[j], b2 = pb.pts[(j + 1) % nb];
            const Vec2 v = b2 - b1;
            const double denom = u.cross(v);
            const Vec2 w = b1 - a1;
            if (std::abs(denom) < 1e-12 * std::max(1.0, u.norm() * v.norm())) {
                // Parallel in projection: only a problem if they overlap.
                if (segment_distance({a1.x, a1.y, 0}, {a2.x, a2.y, 0},
                                     {b1.x, b1.y, 0}, {b2.x, b2.y, 0}) < eps_height)
                    throw DegenerateProjectionError("parallel overlapping segments");
                continue;
            }
            const double s = w.cross(v) / denom;
            const double t = w.cross(u) / denom;
            if (s < -eps_param || s > 1.0 + eps_param || t < -eps_param ||
                t > 1.0 + eps_param)
                continue;
            if (s < eps_param || s > 1.0 - eps_param || t < eps_param ||
                t > 1.0 - eps_param)
                throw DegenerateProjectionError("crossing at a segment endpoint");
            const double ha =
                pa.heights[i] + s * (pa.heights[(i + 1) % na] - pa.heights[i]);
            const double hb =
                pb.heights[j] + t * (pb.heights[(j + 1) % nb] - pb.heights[j]);
            if (std::abs(ha - hb) < eps_height)
                throw DegenerateProjectionError("ambiguous over/under at crossing");
            // Crossing sign is det[tangent of the over strand, tangent of
            // the under strand] in the projection plane.
            const int eps = denom > 0.0 ? 1 : -1;
            signed_total += (ha > hb) ? eps : -eps;
        }
    }
    if (signed_total % 2 != 0)
        throw DegenerateProjectionError("odd signed crossing total");
    return signed_total / 2;
}

double curve_scale(const PLCurve& a, const PLCurve& b) {
    double s = 1.0;
    for (const Vec3& p : a.points) s = std::max(s, p.norm());
    for (const Vec3& p : b.points) s = std::max(s, p.norm());
    return s;
}

}  // namespace

UnitQuaternion UnitQuaternion::from_axis_angle(Vec3 axis, double angle) {
    const double n = axis.norm();
    if (n < 1e-15) throw std::invalid_argument("from_axis_angle: zero axis");
    const double half = angle / 2.0;
    const double s = std::sin(half) / n;
    return UnitQuaternion{std::cos(half), s * axis.x, s * axis.y, s * axis.z}
        .normalized();
}

UnitQuaternion UnitQuaternion::operator*(const UnitQuaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
}

UnitQuaternion UnitQuaternion::normalized() const {
    const double n = norm();
    if (n < 1e-15) throw std::invalid_argument("quaternion: zero norm");
    return {w / n, x / n, y / n, z / n};
}

UnitQuaternion UnitQuaternion::canonical() const {
    const UnitQuaternion q = normalized();
    for (double c : {q.w, q.x, q.y, q.z}) {
        if (c > 0.0) return q;
        if (c < 0.0) return -q;
    }
    return q;
}

RotationPath full_twists(int n, Vec3 axis) {
    if (n < 0) throw std::invalid_argument("full_twists: n must be >= 0");
    const int steps = 16 * n + 16;
    RotationPath path;
    path.samples.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        path.samples.push_back(
            UnitQuaternion::from_axis_angle(axis, kTau * n * t).canonical());
    }
    return path;
}

RotationPath concatenate(const RotationPath& p, const RotationPath& q) {
    RotationPath out;
    out.samples = p.samples;
    out.samples.insert(out.samples.end(), q.samples.begin(), q.samples.end());
    return out;
}

std::vector<std::array<double, 5>> lift_trace(const RotationPath& path) {
    if (path.samples.size() < 2)
        throw std::invalid_argument("lift_path: need at least 2 samples");

    const auto is_identity_rotation = [](const UnitQuaternion& q) {
        return std::abs(std::abs(q.w) - 1.0) < 1e-9;
    };
    if (!is_identity_rotation(path.samples.front()) ||
        !is_identity_rotation(path.samples.back()))
        throw NotALoopError("lift_path: path must start and end at the identity");

    std::vector<std::array<double, 5>> trace;
    trace.reserve(path.samples.size());
    UnitQuaternion lifted = UnitQuaternion::identity();
    trace.push_back({0.0, lifted.w, lifted.x, lifted.y, lifted.z});
    const double tmax = static_cast<double>(path.samples.size() - 1);
    for (std::size_t i = 1; i < path.samples.size(); ++i) {
        const UnitQuaternion& r = path.samples[i];
        const double d = lifted.dot(r);
        if (std::abs(d) <= kMinLiftDot)
            throw SamplingTooCoarseError(
                "lift_path: rotation increment at step " + std::to_string(i) +
                " reaches pi/2");
        lifted = d >= 0.0 ? r : -r;
        trace.push_back({static_cast<double>(i) / tmax, lifted.w, lifted.x,
                         lifted.y, lifted.z});
    }
    return trace;
}

int lift_path(const RotationPath& path) {
    const auto trace = lift_trace(path);
    return trace.back()[1] > 0.0 ? +1 : -1;
}

void validate_curve(const PLCurve& c) {
    if (c.size() < 3) throw std::invalid_argument("PLCurve: need at least 3 points");
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Vec3 p = c.at(i);
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
            throw std::invalid_argument("PLCurve: non-finite point");
        if (distance(p, c.at(i + 1)) < 1e-12)
            throw std::invalid_argument("PLCurve: repeated consecutive point");
    }
}

double min_curve_distance(const PLCurve& a, const PLCurve& b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            best = std::min(best, segment_distance(a.at(i), a.at(i + 1), b.at(j),
                                                   b.at(j + 1)));
    return best;
}

int linking_number(const PLCurve& a, const PLCurve& b) {
    validate_curve(a);
    validate_curve(b);
    if (min_curve_distance(a, b) <= 1e-7)
        throw CurvesTouchError("linking_number: curves are not disjoint");

    const double scale = curve_scale(a, b);
    for (int attempt = 0; attempt < 20; ++attempt) {
        try {
            return crossings_for_direction(a, b, projection_direction(attempt), scale);
        } catch (const DegenerateProjectionError&) {
            // rotate to the next deterministic direction
        }
    }
    throw DegenerateProjectionError("linking_number: no generic direction in 20 tries");
}

double linking_number_gauss_raw(const PLCurve& a, const PLCurve& b) {
    validate_curve(a);
    validate_curve(b);
    if (min_curve_distance(a, b) <= 1e-7)
        throw CurvesTouchError("linking_number: curves are not disjoint");

    // Exact solid angle of the quadrilateral spanned by a segment pair;
    // summed over all pairs this is the discrete Gauss double integral.
    double total = 0.0;
    const std::size_t na = a.size(), nb = b.size();
    for (std::size_t i = 0; i < na; ++i) {
        const Vec3 p1 = a.at(i), p2 = a.at(i + 1);
        for (std::size_t j = 0; j < nb; ++j) {
            const Vec3 q1 = b.at(j), q2 = b.at(j + 1);
            const Vec3 r13 = q1 - p1, r14 = q2 - p1;
            const Vec3 r23 = q1 - p2, r24 = q2 - p2;
            Vec3 n1 = r13.cross(r14);
            Vec3 n2 = r14.cross(r24);
            Vec3 n3 = r24.cross(r23);
            Vec3 n4 = r23.cross(r13);
            const double l1 = n1.norm(), l2 = n2.norm(), l3 = n3.norm(),
                         l4 = n4.norm();
            if (l1 < 1e-300 || l2 < 1e-300 || l3 < 1e-300 || l4 < 1e-300)
                continue;  // coplanar pair subtends no solid angle
            n1 = n1 / l1;
            n2 = n2 / l2;
            n3 = n3 / l3;
            n4 = n4 / l4;
            const auto asin_clamped = [](double v) {
                return std::asin(std::clamp(v, -1.0, 1.0));
            };
            const double omega = asin_clamped(n1.dot(n2)) + asin_clamped(n2.dot(n3)) +
                                 asin_clamped(n3.dot(n4)) + asin_clamped(n4.dot(n1));
            total += omega * sgn((q2 - q1).cross(p2 - p1).dot(r13));
        }
    }
    return total / (4.0 * kPi);
}

int linking_number_gauss(const PLCurve& a, const PLCurve& b) {
    const double raw = linking_number_gauss_raw(a, b);
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 0.1)
        throw SamplingTooCoarseError("linking_number_gauss: residual " +
                                     std::to_string(std::abs(raw - rounded)) +
                                     " exceeds 0.1");
    return static_cast<int>(rounded);
}

std::array<PLCurve, 3> borromean_rings(int samples_per_ring) {
    if (samples_per_ring < 64)
        throw std::invalid_argument("borromean_rings: need at least 64 samples per ring");
    std::array<PLCurve, 3> rings;
    for (int i = 0; i < samples_per_ring; ++i) {
        const double t = kTau * i / samples_per_ring;
        const double c = std::cos(t), s = std::sin(t);
        rings[0].points.push_back({c, 2.0 * s, 0.0});  // xy-plane
        rings[1].points.push_back({0.0, c, 2.0 * s});  // yz-plane
        rings[2].points.push_back({2.0 * s, 0.0, c});  // zx-plane
    }
    return rings;
}

}  // namespace wonderkit
