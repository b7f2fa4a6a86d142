// hyperbolic.hpp -- the unit-disc model of the hyperbolic plane: distance,
// geodesics as arcs orthogonal to the boundary circle, {n,k} tiling
// classification and generation by edge reflections, and the regular
// 4p-gon whose edge pairing carries a genus-p surface.

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wonderkit/numerics.hpp"

namespace wonderkit {

struct BoundaryPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHyperbolicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DepthTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GenusTooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point strictly inside the unit disc.
class DiscPoint {
public:
    DiscPoint() : z_(0.0, 0.0) {}
    explicit DiscPoint(std::complex<double> z);
    DiscPoint(double x, double y) : DiscPoint(std::complex<double>(x, y)) {}

    std::complex<double> z() const { return z_; }
    double x() const { return z_.real(); }
    double y() const { return z_.imag(); }
    Vec2 vec() const { return {z_.real(), z_.imag()}; }

private:
    std::complex<double> z_;
};

// d(p, q) = 2 artanh |(p - q) / (1 - conj(p) q)|.
double hyp_distance(DiscPoint p, DiscPoint q);

// Geodesic of the disc model: a diameter, or a circular arc whose support
// circle meets the unit circle at right angles (|centre|^2 = radius^2 + 1).
struct Geodesic {
    bool is_diameter = false;
    Vec2 direction;  // unit, diameter case
    Vec2 centre;     // arc case
    double radius = 0.0;

    static Geodesic through(DiscPoint p, DiscPoint q);

    // Reflection across the geodesic: circle inversion in the support
    // circle, or a plain mirror for diameters. An isometry of the model.
    DiscPoint reflect(DiscPoint p) const;

    // Unit tangent at a point of the geodesic, oriented towards `toward`
    // (another point on the same geodesic).
    Vec2 tangent_at(DiscPoint at, DiscPoint toward) const;
};

// Interior angle at `vertex` between the geodesics running to `a` and `b`.
double interior_angle(DiscPoint vertex, DiscPoint a, DiscPoint b);

// Disc-preserving Moebius map z -> e^{i rot} (z - a) / (1 - conj(a) z).
DiscPoint mobius(DiscPoint p, std::complex<double> a, double rotation);

enum class TilingClass { spherical, euclidean, hyperbolic };

// Sign of 1/n + 1/k - 1/2, decided in integer arithmetic.
TilingClass classify_tiling(int n, int k);

// Fundamental n-gon of the {n,k} tiling: n vertices equally spaced on the
// hyperbolic circle of radius R about 0, cosh R = cot(pi/n) cot(pi/k);
// the interior angle at each vertex is exactly 2 pi / k.
struct FundamentalPolygon {
    int n = 0;
    int k = 0;
    double circumradius = 0.0;  // hyperbolic
    std::vector<DiscPoint> vertices;
};

FundamentalPolygon regular_polygon(int n, int k);

struct Tile {
    std::vector<DiscPoint> vertices;
    DiscPoint centre;
    int generation = 0;
};

struct Tiling {
    int n = 0;
    int k = 0;
    FundamentalPolygon fundamental;
    std::vector<Tile> tiles;  // ordered by (generation, angle of centre)
};

// Breadth-first reflection of the fundamental polygon across its edges up
// to `depth` generations. Duplicates are dropped when tile centres come
// within hyperbolic distance 1e-6 (Euclidean coordinates compress near the
// boundary, so the metric there is the hyperbolic one).
Tiling generate_tiling(int n, int k, int depth, std::size_t tile_cap = 100000);

// Regular hyperbolic 4p-gon with corner angle pi/(2p): all 4p corners glue
// to a single vertex of total angle 2 pi under the standard side pairing
// a1 b1 a1' b1' ... ap bp ap' bp' (primes are inverses).
struct GenusPolygon {
    int p = 0;
    double circumradius = 0.0;  // cosh R = cot^2(pi/(4p))
    std::vector<DiscPoint> vertices;
    std::vector<std::string> side_word;  // one label per side, in order
    std::vector<int> side_partner;       // side i glues to side_partner[i]
};

GenusPolygon genus_polygon(int p);

}  // namespace wonderkit
