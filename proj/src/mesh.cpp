#include "wonderkit/mesh.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace wonderkit {

namespace {

std::pair<int, int> undirected(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

std::vector<std::pair<int, int>> mesh_edges(const Mesh& m) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& face : m.faces) {
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i)
            edges.push_back(undirected(face[i], face[(i + 1) % k]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::map<int, int> face_size_histogram(const Mesh& m) {
    std::map<int, int> hist;
    for (const auto& face : m.faces) ++hist[static_cast<int>(face.size())];
    return hist;
}

void validate_closed_connected(const Mesh& m) {
    if (m.vertices.empty() || m.faces.empty())
        throw NotClosedError("mesh is empty");

    std::map<std::pair<int, int>, int> incidence;
    for (const auto& face : m.faces) {
        if (face.size() < 3) throw NotClosedError("face with fewer than 3 vertices");
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i) {
            const int a = face[i];
            const int b = face[(i + 1) % k];
            if (a < 0 || b < 0 || a >= static_cast<int>(m.vertices.size()) ||
                b >= static_cast<int>(m.vertices.size()))
                throw NotClosedError("face index out of range");
            if (a == b) throw NotClosedError("degenerate edge on vertex " + std::to_string(a));
            ++incidence[undirected(a, b)];
        }
    }
    for (const auto& [edge, count] : incidence) {
        if (count != 2)
            throw NotClosedError("edge (" + std::to_string(edge.first) + ", " +
                                 std::to_string(edge.second) + ") borders " +
                                 std::to_string(count) + " faces, expected 2");
    }

    // Flood fill over the edge graph; every vertex must be reachable.
    std::vector<std::vector<int>> adjacency(m.vertices.size());
    for (const auto& [edge, count] : incidence) {
        adjacency[edge.first].push_back(edge.second);
        adjacency[edge.second].push_back(edge.first);
    }
    std::vector<char> seen(m.vertices.size(), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                frontier.push(w);
            }
        }
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (!seen[v])
            throw NotConnectedError("vertex " + std::to_string(v) +
                                    " unreachable from vertex 0");
    }
}

int euler_characteristic(const Mesh& m) {
    validate_closed_connected(m);
    const auto v = static_cast<int>(m.vertex_count());
    const auto e = static_cast<int>(mesh_edges(m).size());
    const auto f = static_cast<int>(m.face_count());
    return v - e + f;
}

}  // namespace wonderkit
