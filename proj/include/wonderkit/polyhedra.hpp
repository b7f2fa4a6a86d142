// polyhedra.hpp -- the five regular polyhedra and their enumeration from
// the Euler relation, plus the cuboctahedron built by midpoint truncation
// of either the cube or the octahedron.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wonderkit/mesh.hpp"

namespace wonderkit {

struct NotPlatonicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {p, q}: p-gonal faces, q around each vertex.
struct SchlafliPair {
    int p = 3;
    int q = 3;

    bool operator==(const SchlafliPair&) const = default;
};

struct RegularPolyhedron {
    SchlafliPair symbol;
    std::string name;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
};

// Exactly the (p, q) with 1/p + 1/q > 1/2, p, q >= 3, ordered by face
// count: tetrahedron, cube, octahedron, dodecahedron, icosahedron.
std::vector<RegularPolyhedron> enumerate_regular();

// Unit-edge mesh of one of the five; throws NotPlatonicError otherwise.
Mesh build_platonic(SchlafliPair s);

// Cutting the 8 cube corners at edge midpoints, or dually the 6 octahedron
// corners: 12 vertices, 24 edges, 8 triangles + 6 squares either way, and
// the two meshes agree up to similarity.
Mesh cuboctahedron_from_cube();
Mesh cuboctahedron_from_octahedron();

struct PolyhedronReport {
    std::string name;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int euler = 0;
    std::map<int, int> face_histogram;
};

PolyhedronReport report(const std::string& name, const Mesh& m);

// Faces of the convex hull of a vertex set that is already in convex
// position (every input vertex on the hull), oriented outward. Supports
// the polyhedral builders; not a general-position hull.
Mesh faces_from_convex_vertices(std::vector<Vec3> vertices, double tol = 1e-9);

}  // namespace wonderkit
