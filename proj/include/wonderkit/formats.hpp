// formats.hpp -- deterministic text emitters and parsers: real-number
// formatting, RFC-4180-style CSV, and ASCII OFF meshes.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wonderkit/mesh.hpp"

namespace wonderkit {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest-form significant-digit formatting ("%.*g", C locale, round half
// even). All file emitters and the CLI route numbers through this.
std::string format_real(double v, int significant_digits = 12);

// Minimal CSV table: '.' decimal separator, '\n' line endings, quoting only
// when a field contains a comma, quote or newline.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
};

// ASCII OFF: header line "OFF", then "V F E", vertex lines, then face lines
// "k i0 .. i(k-1)". The edge count in the header is derived from the faces.
std::string write_off(const Mesh& m, int precision = 12);
Mesh read_off(const std::string& text);

// Closed polylines as an OFF file with one polygon per loop.
std::string write_off_polylines(const std::vector<std::vector<Vec3>>& loops,
                                int precision = 12);

// Writes `content` to `path`, refusing to overwrite an existing file unless
// `force`. IO failures are reported with the path in the message.
void write_text_file(const std::string& path, const std::string& content,
                     bool force = false);
std::string read_text_file(const std::string& path);

}  // namespace wonderkit
