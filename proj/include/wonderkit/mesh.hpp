// mesh.hpp -- vertex/face tables for polyhedra and swept surfaces, edge
// derivation, and the Euler characteristic with closed/connected checks.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wonderkit/numerics.hpp"

namespace wonderkit {

struct NotClosedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Faces are cyclic vertex index lists, oriented counterclockwise when seen
// from outside for the polyhedral builders. Edges are derived, never
// stored, so "sum of face sizes == 2E" stays a computed invariant.
struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

// Distinct undirected edges (i < j), sorted.
std::vector<std::pair<int, int>> mesh_edges(const Mesh& m);

std::map<int, int> face_size_histogram(const Mesh& m);

// Throws NotClosedError unless every edge is shared by exactly two faces,
// and NotConnectedError unless the edge graph reaches every vertex. Both
// carry a short diagnostic naming an offending edge or vertex.
void validate_closed_connected(const Mesh& m);

// V - E + F after validation.
int euler_characteristic(const Mesh& m);

}  // namespace wonderkit
