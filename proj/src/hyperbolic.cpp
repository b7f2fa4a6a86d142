#include "wonderkit/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace wonderkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryMargin = 1e-12;
constexpr double kDedupDistance = 1e-6;

// Euclidean radius of the hyperbolic circle of radius R about the origin.
double euclidean_radius(double hyperbolic_radius) {
    return std::tanh(hyperbolic_radius / 2.0);
}

}  // namespace

DiscPoint::DiscPoint(std::complex<double> z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
        std::abs(z) >= 1.0 - kBoundaryMargin)
        throw BoundaryPointError("point not strictly inside the unit disc: |z| = " +
                                 std::to_string(std::abs(z)));
}

double hyp_distance(DiscPoint p, DiscPoint q) {
    const std::complex<double> num = p.z() - q.z();
    const std::complex<double> den = 1.0 - std::conj(p.z()) * q.z();
    return 2.0 * std::atanh(std::abs(num / den));
}

Geodesic Geodesic::through(DiscPoint p, DiscPoint q) {
    const Vec2 a = p.vec();
    const Vec2 b = q.vec();
    if (distance(a, b) < 1e-14)
        throw std::invalid_argument("Geodesic::through: points coincide");

    Geodesic g;
    // Support circle orthogonal to the unit circle satisfies
    // 2 <x, c> = |x|^2 + 1 for every x on it; degenerate (colinear with
    // the origin) means a diameter.
    const double det = 2.0 * a.cross(b);
    if (std::abs(det) < 1e-12 * std::max(1.0, a.norm() * b.norm())) {
        g.is_diameter = true;
        g.direction = (b - a).normalized();
        return g;
    }
    const double ra = a.norm2() + 1.0;
    const double rb = b.norm2() + 1.0;
    g.centre = Vec2{(ra * b.y - rb * a.y) / det, (rb * a.x - ra * b.x) / det};
    g.radius = std::sqrt(g.centre.norm2() - 1.0);
    return g;
}

DiscPoint Geodesic::reflect(DiscPoint p) const {
    if (is_diameter) {
        // Mirror across the line through the origin with this direction.
        const Vec2 v = p.vec();
        const Vec2 m = direction * (2.0 * v.dot(direction)) - v;
        return DiscPoint(m.x, m.y);
    }
    // Inversion in the support circle; exact closed form, no trig.
    const Vec2 d = p.vec() - centre;
    const Vec2 image = centre + d * (radius * radius / d.norm2());
    return DiscPoint(image.x, image.y);
}

Vec2 Geodesic::tangent_at(DiscPoint at, DiscPoint toward) const {
    if (is_diameter) {
        const Vec2 chord = toward.vec() - at.vec();
        return chord.dot(direction) >= 0.0 ? direction : -direction;
    }
    Vec2 t = (at.vec() - centre).perp().normalized();
    // Geodesic arcs inside the disc span less than a half circle, so the
    // chord decides the orientation.
    if (t.dot(toward.vec() - at.vec()) < 0.0) t = -t;
    return t;
}

double interior_angle(DiscPoint vertex, DiscPoint a, DiscPoint b) {
    const Vec2 ta = Geodesic::through(vertex, a).tangent_at(vertex, a);
    const Vec2 tb = Geodesic::through(vertex, b).tangent_at(vertex, b);
    const double c = std::clamp(ta.dot(tb), -1.0, 1.0);
    return std::acos(c);
}

DiscPoint mobius(DiscPoint p, std::complex<double> a, double rotation) {
    if (std::abs(a) >= 1.0 - kBoundaryMargin)
        throw BoundaryPointError("mobius: translation parameter outside the disc");
    const std::complex<double> w =
        std::polar(1.0, rotation) * (p.z() - a) / (1.0 - std::conj(a) * p.z());
    return DiscPoint(w);
}

TilingClass classify_tiling(int n, int k) {
    if (n < 3 || k < 3)
        throw std::invalid_argument("classify_tiling: need n >= 3 and k >= 3");
    // 1/n + 1/k vs 1/2  <=>  2(n + k) vs n k, exactly in integers.
    const long long lhs = 2LL * (n + k);
    const long long rhs = 1LL * n * k;
    if (lhs > rhs) return TilingClass::spherical;
    if (lhs == rhs) return TilingClass::euclidean;
    return TilingClass::hyperbolic;
}

FundamentalPolygon regular_polygon(int n, int k) {
    if (classify_tiling(n, k) != TilingClass::hyperbolic)
        throw NotHyperbolicError("regular_polygon: {" + std::to_string(n) + "," +
                                 std::to_string(k) + "} is not hyperbolic");
    FundamentalPolygon poly;
    poly.n = n;
    poly.k = k;
    // Right triangle (centre, vertex, edge midpoint) with angles pi/n and
    // pi/k gives cosh R = cot(pi/n) cot(pi/k) for the circumradius.
    const double cosh_r = 1.0 / (std::tan(kPi / n) * std::tan(kPi / k));
    poly.circumradius = std::acosh(cosh_r);
    const double er = euclidean_radius(poly.circumradius);
    poly.vertices.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double angle = 2.0 * kPi * j / n;
        poly.vertices.emplace_back(er * std::cos(angle), er * std::sin(angle));
    }
    return poly;
}

Tiling generate_tiling(int n, int k, int depth, std::size_t tile_cap) {
    if (depth < 0) throw std::invalid_argument("generate_tiling: depth must be >= 0");
    Tiling tiling;
    tiling.n = n;
    tiling.k = k;
    tiling.fundamental = regular_polygon(n, k);

    Tile seed;
    seed.vertices = tiling.fundamental.vertices;
    seed.centre = DiscPoint(0.0, 0.0);
    seed.generation = 0;

    std::vector<Tile> tiles{seed};
    std::deque<std::size_t> frontier{0};

    auto already_present = [&](DiscPoint centre) {
        for (const Tile& t : tiles)
            if (hyp_distance(t.centre, centre) < kDedupDistance) return true;
        return false;
    };

    while (!frontier.empty()) {
        const std::size_t id = frontier.front();
        frontier.pop_front();
        if (tiles[id].generation >= depth) continue;
        const Tile current = tiles[id];  // copy: `tiles` may reallocate
        for (int e = 0; e < n; ++e) {
            const DiscPoint va = current.vertices[e];
            const DiscPoint vb = current.vertices[(e + 1) % n];
            const Geodesic mirror = Geodesic::through(va, vb);
            Tile image;
            image.generation = current.generation + 1;
            image.centre = mirror.reflect(current.centre);
            if (already_present(image.centre)) continue;
            image.vertices.reserve(n);
            for (const DiscPoint& v : current.vertices)
                image.vertices.push_back(mirror.reflect(v));
            tiles.push_back(std::move(image));
            if (tiles.size() > tile_cap)
                throw DepthTooLargeError("generate_tiling: more than " +
                                         std::to_string(tile_cap) + " tiles");
            frontier.push_back(tiles.size() - 1);
        }
    }

    // Canonical order: generation, then angle of the centre. Keeps renders
    // byte-stable across runs.
    std::stable_sort(tiles.begin(), tiles.end(), [](const Tile& a, const Tile& b) {
        if (a.generation != b.generation) return a.generation < b.generation;
        const double aa = std::atan2(a.centre.y(), a.centre.x());
        const double ab = std::atan2(b.centre.y(), b.centre.x());
        if (aa != ab) return aa < ab;
        return a.centre.vec().norm2() < b.centre.vec().norm2();
    });
    tiling.tiles = std::move(tiles);
    return tiling;
}

GenusPolygon genus_polygon(int p) {
    if (p < 2)
        throw GenusTooSmallError("genus_polygon: need p >= 2 (p = 1 is the flat torus)");
    GenusPolygon poly;
    poly.p = p;
    const int sides = 4 * p;
    // Corner angle pi/(2p) makes the 4p corners glue to 2 pi total; the
    // circumradius follows from the same right-triangle relation with
    // vertex half-angle pi/(4p).
    const double cot = 1.0 / std::tan(kPi / sides);
    poly.circumradius = std::acosh(cot * cot);
    const double er = euclidean_radius(poly.circumradius);
    poly.vertices.reserve(sides);
    for (int j = 0; j < sides; ++j) {
        const double angle = 2.0 * kPi * j / sides;
        poly.vertices.emplace_back(er * std::cos(angle), er * std::sin(angle));
    }
    poly.side_word.reserve(sides);
    poly.side_partner.resize(sides);
    for (int h = 0; h < p; ++h) {
        const std::string idx = std::to_string(h + 1);
        poly.side_word.push_back("a" + idx);
        poly.side_word.push_back("b" + idx);
        poly.side_word.push_back("a" + idx + "'");
        poly.side_word.push_back("b" + idx + "'");
        poly.side_partner[4 * h + 0] = 4 * h + 2;
        poly.side_partner[4 * h + 1] = 4 * h + 3;
        poly.side_partner[4 * h + 2] = 4 * h + 0;
        poly.side_partner[4 * h + 3] = 4 * h + 1;
    }
    return poly;
}

}  // namespace wonderkit
