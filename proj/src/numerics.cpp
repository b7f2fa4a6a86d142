#include "wonderkit/numerics.hpp"

#include <cmath>

namespace wonderkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

double checked_eval(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw NonFiniteError("function value not finite at x = " + std::to_string(x));
    return v;
}

}  // namespace

Angle Angle::normalized() const {
    double r = std::fmod(radians + kPi, 2.0 * kPi);
    if (r <= 0.0) r += 2.0 * kPi;
    return {r - kPi};
}

std::optional<double> bisect(const std::function<double(double)>& f,
                             double lo, double hi, Tolerance tol) {
    if (!(lo < hi))
        throw std::invalid_argument("bisect: requires lo < hi");
    if (tol.abs_tol <= 0.0 || tol.max_iter <= 0)
        throw std::invalid_argument("bisect: tolerance must be positive");

    double flo = checked_eval(f, lo);
    double fhi = checked_eval(f, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;

    for (int i = 0; i < tol.max_iter && (hi - lo) > tol.abs_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = checked_eval(f, mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("central_diff: step must be positive");
    const double fp = checked_eval(f, x + h);
    const double fm = checked_eval(f, x - h);
    return (fp - fm) / (2.0 * h);
}

}  // namespace wonderkit
