// numerics.hpp -- shared scalar/vector types, tolerance policy, bisection
// root finding and numerical differentiation used by every other module.

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

namespace wonderkit {

struct NonFiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    // z-component of the 3D cross product; positive when o is ccw of *this.
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }
    // rotation by +90 degrees (ccw)
    Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
    double angle() const { return std::atan2(y, x); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(Vec3 o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline Vec3 operator*(double s, Vec3 v) { return v * s; }
inline double distance(Vec3 a, Vec3 b) { return (a - b).norm(); }

// Plane angle in radians. Normalization maps into (-pi, pi].
struct Angle {
    double radians = 0.0;

    static Angle from_degrees(double deg) {
        return {deg * (3.14159265358979323846 / 180.0)};
    }
    double degrees() const { return radians * (180.0 / 3.14159265358979323846); }
    Angle normalized() const;
};

// Absolute tolerance plus an iteration cap. Desk-scale quantities in this
// library are O(1)..O(10), so a single absolute default works throughout.
struct Tolerance {
    double abs_tol = 1e-9;
    int max_iter = 200;
};

// Neumaier-compensated accumulator; the running error term keeps long
// harmonic-type sums accurate to the last few ulps.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Bisection on [lo, hi]. Returns the midpoint of the final bracket once its
// width is <= tol.abs_tol, or nullopt when f(lo) and f(hi) have the same
// strict sign (no guaranteed root). The bracket always contains a sign
// change and halves exactly once per iteration.
//
// Throws NonFiniteError when f evaluates to NaN/inf anywhere it is probed,
// and std::invalid_argument unless lo < hi.
std::optional<double> bisect(const std::function<double(double)>& f,
                             double lo, double hi, Tolerance tol = {});

// Second-order central difference (f(x+h) - f(x-h)) / 2h. Exact (to
// rounding) for polynomials of degree <= 2.
double central_diff(const std::function<double(double)>& f, double x, double h);

}  // namespace wonderkit
