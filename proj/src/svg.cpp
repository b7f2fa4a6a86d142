#include "wonderkit/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "wonderkit/formats.hpp"

namespace wonderkit {

SvgDocument::SvgDocument(double min_x, double min_y, double width, double height,
                         RenderStyle style)
    : min_x_(min_x), min_y_(min_y), width_(width), height_(height), style_(style) {
    if (!(width > 0.0) || !(height > 0.0))
        throw std::invalid_argument("SvgDocument: degenerate view box");
}

std::string SvgDocument::fmt(double v) const {
    // -0 and 0 print identically; keeps golden files stable.
    if (v == 0.0) v = 0.0;
    return format_real(v, style_.precision);
}

void SvgDocument::add_polyline(const std::vector<Vec2>& points,
                               const std::string& stroke, bool closed) {
    if (points.size() < 2) return;
    std::string d;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Vec2 p = flip(points[i]);
        d += (i == 0 ? "M" : " L");
        d += fmt(p.x);
        d += ' ';
        d += fmt(p.y);
    }
    if (closed) d += " Z";
    elements_.push_back("<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
                        "\" stroke-width=\"" + fmt(style_.stroke_width) + "\"/>");
}

std::string SvgDocument::arc_command(const ArcSegment& a) const {
    std::string d;
    const double sweep = a.sweep();
    // A full circle cannot be a single arc command; split in half.
    const int pieces = std::abs(sweep) > std::numbers::pi ? 2 : 1;
    for (int i = 1; i <= pieces; ++i) {
        const Vec2 end = flip(a.point_at(a.angle_begin + sweep * i / pieces));
        const int large = (std::abs(sweep) / pieces) > std::numbers::pi ? 1 : 0;
        // ccw in maths coordinates becomes sweep=0 after the y-flip.
        const int sweep_flag = sweep > 0.0 ? 0 : 1;
        d += " A" + fmt(a.radius) + ' ' + fmt(a.radius) + " 0 " +
             std::to_string(large) + ' ' + std::to_string(sweep_flag) + ' ' +
             fmt(end.x) + ' ' + fmt(end.y);
    }
    return d;
}

void SvgDocument::add_arcs(const std::vector<ArcSegment>& arcs,
                           const std::string& stroke, bool closed) {
    if (arcs.empty()) return;
    std::string d;
    const Vec2 start = flip(arcs.front().start());
    d += "M" + fmt(start.x) + ' ' + fmt(start.y);
    for (const ArcSegment& a : arcs) d += arc_command(a);
    if (closed) d += " Z";
    elements_.push_back("<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
                        "\" stroke-width=\"" + fmt(style_.stroke_width) + "\"/>");
}

void SvgDocument::begin_path(Vec2 start) {
    const Vec2 s = flip(start);
    pending_path_ = "M" + fmt(s.x) + ' ' + fmt(s.y);
}

void SvgDocument::path_line_to(Vec2 p) {
    const Vec2 q = flip(p);
    pending_path_ += " L" + fmt(q.x) + ' ' + fmt(q.y);
}

void SvgDocument::path_arc_to(const ArcSegment& a) { pending_path_ += arc_command(a); }

void SvgDocument::end_path(const std::string& stroke, bool closed) {
    if (closed) pending_path_ += " Z";
    elements_.push_back("<path d=\"" + pending_path_ + "\" fill=\"none\" stroke=\"" +
                        stroke + "\" stroke-width=\"" + fmt(style_.stroke_width) +
                        "\"/>");
    pending_path_.clear();
}

void SvgDocument::add_curve(const PlaneCurve& curve, const std::string& stroke) {
    if (!curve.arcs.empty()) {
        add_arcs(curve.arcs, stroke, false);
        return;
    }
    PlaneCurve sampled = curve;
    sampled.samples = std::max(curve.samples, style_.curve_samples);
    add_polyline(sampled.sample_points(), stroke, false);
}

void SvgDocument::add_segment(Vec2 from, Vec2 to, const std::string& stroke) {
    add_polyline({from, to}, stroke, false);
}

void SvgDocument::add_circle_outline(Vec2 centre, double radius,
                                     const std::string& stroke) {
    const Vec2 c = flip(centre);
    elements_.push_back("<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
                        "\" r=\"" + fmt(radius) + "\" fill=\"none\" stroke=\"" +
                        stroke + "\" stroke-width=\"" + fmt(style_.stroke_width) +
                        "\"/>");
}

std::string SvgDocument::to_string() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           fmt(min_x_) + ' ' + fmt(min_y_) + ' ' + fmt(width_) + ' ' + fmt(height_) +
           "\">\n";
    for (const std::string& e : elements_) {
        out += e;
        out += '\n';
    }
    out += "</svg>\n";
    return out;
}

std::string generation_shade(int generation, int max_generation) {
    const int span = std::max(max_generation, 1);
    const int level = std::min(generation, span);
    // 0 -> #000000, deepest generation -> #c8c8c8.
    const int grey = (0xc8 * level) / span;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", grey, grey, grey);
    return buf;
}

}  // namespace wonderkit
