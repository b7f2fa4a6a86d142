#include "wonderkit/formats.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wonderkit {

std::string format_real(double v, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (significant_digits > 17) significant_digits = 17;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    // snprintf never emits a locale decimal comma here: the process stays in
    // the default "C" locale by contract (no setlocale anywhere).
    return buf;
}

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\n") != std::string::npos;
}

void append_field(std::string& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out += field;
        return;
    }
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

void append_row(std::string& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        append_field(out, row[i]);
    }
    out += '\n';
}

}  // namespace

std::string Csv::to_string() const {
    std::string out;
    if (!header.empty()) append_row(out, header);
    for (const auto& row : rows) append_row(out, row);
    return out;
}

std::string write_off(const Mesh& m, int precision) {
    const std::size_t edge_count = mesh_edges(m).size();
    std::string out = "OFF\n";
    out += std::to_string(m.vertex_count());
    out += ' ';
    out += std::to_string(m.face_count());
    out += ' ';
    out += std::to_string(edge_count);
    out += '\n';
    for (const Vec3& v : m.vertices) {
        out += format_real(v.x, precision);
        out += ' ';
        out += format_real(v.y, precision);
        out += ' ';
        out += format_real(v.z, precision);
        out += '\n';
    }
    for (const auto& face : m.faces) {
        out += std::to_string(face.size());
        for (int idx : face) {
            out += ' ';
            out += std::to_string(idx);
        }
        out += '\n';
    }
    return out;
}

Mesh read_off(const std::string& text) {
    std::istringstream in(text);
    std::string token;
    if (!(in >> token) || token != "OFF")
        throw ParseError("OFF: missing header keyword");
    std::size_t nv = 0, nf = 0, ne = 0;
    if (!(in >> nv >> nf >> ne))
        throw ParseError("OFF: malformed count line");
    Mesh m;
    m.vertices.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        if (!(in >> m.vertices[i].x >> m.vertices[i].y >> m.vertices[i].z))
            throw ParseError("OFF: truncated vertex list");
    }
    m.faces.resize(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        std::size_t k = 0;
        if (!(in >> k) || k < 3)
            throw ParseError("OFF: bad face arity");
        m.faces[i].resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (!(in >> m.faces[i][j]))
                throw ParseError("OFF: truncated face list");
            if (m.faces[i][j] < 0 || m.faces[i][j] >= static_cast<int>(nv))
                throw ParseError("OFF: face index out of range");
        }
    }
    return m;
}

std::string write_off_polylines(const std::vector<std::vector<Vec3>>& loops,
                                int precision) {
    Mesh m;
    for (const auto& loop : loops) {
        std::vector<int> face;
        face.reserve(loop.size());
        for (const Vec3& p : loop) {
            face.push_back(static_cast<int>(m.vertices.size()));
            m.vertices.push_back(p);
        }
        m.faces.push_back(std::move(face));
    }
    return write_off(m, precision);
}

void write_text_file(const std::string& path, const std::string& content, bool force) {
    namespace fs = std::filesystem;
    if (!force && fs::exists(path))
        throw IoError(path + ": already exists (use --force to overwrite)");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError(path + ": write failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace wonderkit
