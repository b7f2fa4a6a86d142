#include "wonderkit/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wonderkit {

namespace {

// Vertex sets in convenient exact-ish coordinates; scaled to unit edge by
// the builders.
std::vector<Vec3> tetrahedron_vertices() {
    return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
}

std::vector<Vec3> cube_vertices() {
    std::vector<Vec3> v;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
    return v;
}

std::vector<Vec3> octahedron_vertices() {
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

std::vector<Vec3> icosahedron_vertices() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v;
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            v.push_back({0.0, s1 * 1.0, s2 * phi});
            v.push_back({s1 * 1.0, s2 * phi, 0.0});
            v.push_back({s2 * phi, 0.0, s1 * 1.0});
        }
    return v;
}

std::vector<Vec3> dodecahedron_vertices() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double inv = 1.0 / phi;
    std::vector<Vec3> v = cube_vertices();
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            v.push_back({0.0, s1 * inv, s2 * phi});
            v.push_back({s1 * inv, s2 * phi, 0.0});
            v.push_back({s2 * phi, 0.0, s1 * inv});
        }
    return v;
}

std::vector<Vec3> midpoint_truncation(const std::vector<Vec3>& vertices,
                                      double edge_length) {
    // Edge midpoints, deduplicated. Edges are the vertex pairs at the
    // solid's (known, uniform) edge length.
    std::vector<Vec3> mids;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(distance(vertices[i], vertices[j]) - edge_length) < 1e-9)
                mids.push_back((vertices[i] + vertices[j]) * 0.5);
        }
    }
    return mids;
}

double shortest_pair_distance(const std::vector<Vec3>& v) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            best = std::min(best, distance(v[i], v[j]));
    return best;
}

Mesh scaled_hull(std::vector<Vec3> vertices) {
    // Unit edge: the shortest vertex-pair distance of a regular solid in
    // convex position is its edge length.
    const double edge = shortest_pair_distance(vertices);
    for (Vec3& v : vertices) v = v / edge;
    return faces_from_convex_vertices(std::move(vertices));
}

}  // namespace

Mesh faces_from_convex_vertices(std::vector<Vec3> vertices, double tol) {
    const std::size_t n = vertices.size();
    if (n < 4) throw std::invalid_argument("faces_from_convex_vertices: need >= 4 points");

    Vec3 centroid{0, 0, 0};
    for (const Vec3& v : vertices) centroid = centroid + v;
    centroid = centroid / double(n);

    Mesh mesh;
    mesh.vertices = vertices;
    std::set<std::vector<int>> seen;

    // Supporting-plane enumeration over vertex triples: fine for the small
    // vertex counts of the builders (<= 20).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec3 normal = (vertices[j] - vertices[i]).cross(vertices[k] - vertices[i]);
                const double len = normal.norm();
                if (len < tol) continue;
                normal = normal / len;
                if (normal.dot(vertices[i] - centroid) < 0.0) normal = -normal;

                bool supporting = true;
                std::vector<int> face;
                for (std::size_t m = 0; m < n; ++m) {
                    const double d = normal.dot(vertices[m] - vertices[i]);
                    if (d > tol) {
                        supporting = false;
                        break;
                    }
                    if (d > -tol) face.push_back(static_cast<int>(m));
                }
                if (!supporting || face.size() < 3) continue;

                std::vector<int> key = face;
                std::sort(key.begin(), key.end());
                if (!seen.insert(key).second) continue;

                // Order the coplanar vertices ccw about the face centroid,
                // viewed from outside (normal points away from the body).
                Vec3 fc{0, 0, 0};
                for (int idx : face) fc = fc + vertices[idx];
                fc = fc / double(face.size());
                const Vec3 ref = (vertices[face[0]] - fc).normalized();
                const Vec3 up = normal.cross(ref);
                std::sort(face.begin(), face.end(), [&](int a, int b) {
                    const Vec3 da = vertices[a] - fc;
                    const Vec3 db = vertices[b] - fc;
                    return std::atan2(da.dot(up), da.dot(ref)) <
                           std::atan2(db.dot(up), db.dot(ref));
                });
                mesh.faces.push_back(std::move(face));
            }
        }
    }
    return mesh;
}

std::vector<RegularPolyhedron> enumerate_regular() {
    // Solve 1/p + 1/q > 1/2 over p, q >= 3: the relation pF = 2E = qV plus
    // Euler's V - E + F = 2 pins E = 1 / (1/p + 1/q - 1/2).
    std::vector<RegularPolyhedron> out;
    const auto name_of = [](int p, int q) -> std::string {
        if (p == 3 && q == 3) return "tetrahedron";
        if (p == 4 && q == 3) return "cube";
        if (p == 3 && q == 4) return "octahedron";
        if (p == 5 && q == 3) return "dodecahedron";
        if (p == 3 && q == 5) return "icosahedron";
        return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
    };
    for (int p = 3; p <= 6; ++p) {
        for (int q = 3; q <= 6; ++q) {
            if (2 * (p + q) <= p * q) continue;  // 1/p + 1/q <= 1/2
            RegularPolyhedron r;
            r.symbol = {p, q};
            r.name = name_of(p, q);
            const int denom = 2 * (p + q) - p * q;  // positive here
            r.edges = 2 * p * q / denom;
            r.vertices = 2 * r.edges / q;
            r.faces = 2 * r.edges / p;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.faces != b.faces) return a.faces < b.faces;
        return a.symbol.p < b.symbol.p;
    });
    return out;
}

Mesh build_platonic(SchlafliPair s) {
    if (s == SchlafliPair{3, 3}) return scaled_hull(tetrahedron_vertices());
    if (s == SchlafliPair{4, 3}) return scaled_hull(cube_vertices());
    if (s == SchlafliPair{3, 4}) return scaled_hull(octahedron_vertices());
    if (s == SchlafliPair{5, 3}) return scaled_hull(dodecahedron_vertices());
    if (s == SchlafliPair{3, 5}) return scaled_hull(icosahedron_vertices());
    throw NotPlatonicError("build_platonic: {" + std::to_string(s.p) + "," +
                           std::to_string(s.q) + "} is not a regular polyhedron");
}

Mesh cuboctahedron_from_cube() {
    // Cube of edge 2: truncation planes through the midpoints of the
    // twelve edges leave exactly those midpoints.
    return faces_from_convex_vertices(midpoint_truncation(cube_vertices(), 2.0));
}

Mesh cuboctahedron_from_octahedron() {
    const auto octa = octahedron_vertices();
    return faces_from_convex_vertices(midpoint_truncation(octa, std::sqrt(2.0)));
}

PolyhedronReport report(const std::string& name, const Mesh& m) {
    PolyhedronReport r;
    r.name = name;
    r.vertices = static_cast<int>(m.vertex_count());
    r.edges = static_cast<int>(mesh_edges(m).size());
    r.faces = static_cast<int>(m.face_count());
    r.euler = euler_characteristic(m);
    r.face_histogram = face_size_histogram(m);
    return r;
}

}  // namespace wonderkit
