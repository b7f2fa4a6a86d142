// svg.hpp -- deterministic SVG 1.1 emission: fixed-precision coordinates,
// no timestamps, native arc segments for arc-chain curves and polylines
// for everything else.

#pragma once

#include <string>
#include <vector>

#include "wonderkit/planar_curves.hpp"

namespace wonderkit {

struct RenderStyle {
    double stroke_width = 0.01;
    int curve_samples = 512;
    int precision = 12;  // significant digits in coordinates
};

// Collects stroked path elements and renders a standalone SVG document.
// The y-axis is flipped on output so the mathematical orientation (y up,
// ccw positive) displays correctly.
class SvgDocument {
public:
    SvgDocument(double min_x, double min_y, double width, double height,
                RenderStyle style = {});

    void add_polyline(const std::vector<Vec2>& points, const std::string& stroke,
                      bool closed = false);
    void add_curve(const PlaneCurve& curve, const std::string& stroke);
    void add_arcs(const std::vector<ArcSegment>& arcs, const std::string& stroke,
                  bool closed = false);
    void add_segment(Vec2 from, Vec2 to, const std::string& stroke);
    void add_circle_outline(Vec2 centre, double radius, const std::string& stroke);

    // Mixed line/arc path, built piecewise.
    void begin_path(Vec2 start);
    void path_line_to(Vec2 p);
    void path_arc_to(const ArcSegment& a);  // from its start to its end
    void end_path(const std::string& stroke, bool closed);

    std::string to_string() const;

private:
    std::string fmt(double v) const;
    std::string arc_command(const ArcSegment& a) const;
    Vec2 flip(Vec2 p) const { return {p.x, -p.y}; }

    double min_x_, min_y_, width_, height_;
    RenderStyle style_;
    std::vector<std::string> elements_;
    std::string pending_path_;
};

// Grey shade for generation-indexed strokes: generation 0 is black, later
// generations fade towards (but never reach) white.
std::string generation_shade(int generation, int max_generation);

}  // namespace wonderkit
