#include "wonderkit/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wonderkit/formats.hpp"
#include "wonderkit/hyperbolic.hpp"
#include "wonderkit/mesh.hpp"
#include "wonderkit/numerics.hpp"
#include "wonderkit/planar_curves.hpp"
#include "wonderkit/polyhedra.hpp"
#include "wonderkit/series.hpp"
#include "wonderkit/space_curves.hpp"
#include "wonderkit/svg.hpp"
#include "wonderkit/topology.hpp"

namespace wonderkit {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

struct Emit {
    std::string output;  // empty: stdout
    bool force = false;
    int precision = 12;

    void text(const std::string& content) const {
        if (output.empty()) {
            std::cout << content;
        } else {
            std::cout.flush();  // keep ordering sane when output is /dev/stdout
            write_text_file(output, content, force);
        }
    }
    std::string real(double v) const { return format_real(v, precision); }
    void line(const std::string& s) const { std::cout << s << '\n'; }
};

int env_precision(int fallback) {
    // WONDERKIT_PRECISION overrides the digit count when set.
    if (const char* env = std::getenv("WONDERKIT_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 17) return static_cast<int>(v);
    }
    return fallback;
}

RenderStyle style_for(const Emit& emit) {
    RenderStyle style;
    style.precision = emit.precision;
    return style;
}

// ---- series ----------------------------------------------------------

void cmd_series_harmonic(std::int64_t n, const Emit& emit) {
    emit.line(emit.real(harmonic_partial(n)));
}

void cmd_series_alternating(std::int64_t n, const Emit& emit) {
    emit.line(emit.real(alternating_partial(n)));
}

void cmd_series_rearrange(double target, std::uint64_t max_terms, double tol,
                          const Emit& emit) {
    RearrangeStop stop = tol > 0.0 ? RearrangeStop::tolerance(tol)
                                   : RearrangeStop::max_terms(max_terms);
    const RearrangementTrace trace = rearrange(target, stop);
    emit.text(trace_to_csv(trace, emit.precision));
}

// ---- planar ----------------------------------------------------------

void cmd_width_reuleaux(int n, double w, int directions, const Emit& emit) {
    const ConvexBody body = reuleaux(n, w);
    double wmin = std::numeric_limits<double>::infinity();
    double wmax = -wmin;
    for (int i = 0; i < directions; ++i) {
        const double value = width(body, Angle{kTau * i / (2.0 * directions)});
        wmin = std::min(wmin, value);
        wmax = std::max(wmax, value);
    }
    emit.line("min_width " + emit.real(wmin));
    emit.line("max_width " + emit.real(wmax));
    emit.line("perimeter " + emit.real(body.perimeter()));
    if (!emit.output.empty()) {
        const double half = 0.75 * w;
        SvgDocument svg(-half, -half, 2 * half, 2 * half, style_for(emit));
        svg.add_arcs(body.boundary(), "#000000", true);
        emit.text(svg.to_string());
    }
}

void cmd_rope(std::optional<double> height, std::optional<double> extra,
              const Emit& emit) {
    if (height)
        emit.line(emit.real(rope_extra(*height)));
    else
        emit.line(emit.real(rope_gap(*extra)));
}

void cmd_spiral(const std::string& type, double a, double b, double turns,
                int samples, const Emit& emit) {
    const double theta_end = kTau * turns;
    const PlaneCurve curve = type == "archimedean"
                                 ? archimedean(a, b, 0.0, theta_end, samples)
                                 : logarithmic(a, b, 0.0, theta_end, samples);
    double extent = 0.0;
    for (const Vec2& p : curve.sample_points())
        extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    extent *= 1.05;
    SvgDocument svg(-extent, -extent, 2 * extent, 2 * extent, style_for(emit));
    svg.add_curve(curve, "#000000");
    emit.text(svg.to_string());
}

void cmd_web(int radials, int rings, double frame_radius, double angle_deg,
             const Emit& emit) {
    const WebLayout web =
        spider_web(radials, rings, frame_radius, Angle::from_degrees(angle_deg));
    const double extent = 1.6 * frame_radius;
    SvgDocument svg(-extent, -extent, 2 * extent, 2 * extent, style_for(emit));
    for (const auto& [from, to] : web.y_threads) svg.add_segment(from, to, "#404040");
    std::vector<Vec2> frame = web.frame;
    svg.add_polyline(frame, "#000000", true);
    for (const auto& [from, to] : web.radials) svg.add_segment(from, to, "#808080");
    svg.add_curve(web.scaffold, "#b0b0b0");
    svg.add_curve(web.capture, "#000000");
    emit.text(svg.to_string());
}

void cmd_helix_project(double radius, double pitch, double plane_height,
                       double t0, double t1, int samples, bool left,
                       const std::string& profile_csv, const Emit& emit) {
    Helix h{radius, pitch, left ? Handedness::left : Handedness::right};
    const PlaneCurve image = project_from_axis(h, plane_height, t0, t1, samples);
    if (!profile_csv.empty()) {
        // Measured tangent-radial angle along the image: the record that
        // shows how far the projection is from an equiangular spiral.
        Csv csv;
        csv.header = {"t", "rho", "psi_deg"};
        for (int i = 0; i < samples; ++i) {
            const double t = t0 + (t1 - t0) * i / double(samples - 1);
            csv.rows.push_back(
                {emit.real(t), emit.real(image.position(t).norm()),
                 emit.real(tangent_radial_angle(image, t).degrees())});
        }
        write_text_file(profile_csv, csv.to_string(), emit.force);
    }
    double extent = 0.0;
    for (const Vec2& p : image.sample_points())
        extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    extent *= 1.05;
    SvgDocument svg(-extent, -extent, 2 * extent, 2 * extent, style_for(emit));
    svg.add_curve(image, "#000000");
    emit.text(svg.to_string());
}

void cmd_yinyang(double radius, const Emit& emit) {
    const YinYang y = yin_yang(radius);
    const double extent = 1.1 * radius;
    SvgDocument svg(-extent, -extent, 2 * extent, 2 * extent, style_for(emit));
    svg.add_circle_outline({0.0, 0.0}, radius, "#000000");
    svg.add_arcs(y.divider.arcs, "#000000", false);
    emit.text(svg.to_string());
}

// ---- shell -----------------------------------------------------------

std::function<double(double)> ratio_law(const std::string& name, double value) {
    if (name == "curvature") return curvature_tube_ratio;
    if (name == "sine") return [](double alpha) { return std::sin(alpha); };
    return [value](double) { return value; };  // "const"
}

void cmd_shell_solve(const std::string& ratio, double value, const Emit& emit) {
    const TouchingAngleReport report = solve_touching_angle(ratio_law(ratio, value));
    if (report.root) {
        emit.line("root_deg " + emit.real(report.root->degrees()));
        emit.line("gap_at_root " + emit.real(report.gap_at_root));
    } else {
        emit.line("root_deg no_root");
    }
    emit.line("half_golden_deg " + emit.real(report.half_golden.degrees()));
    if (report.deviation_radians)
        emit.line("deviation_deg " +
                  emit.real(Angle{*report.deviation_radians}.degrees()));
    emit.line("sign_changes " + std::to_string(report.scan_sign_changes));
}

void cmd_shell_mesh(double alpha_deg, const std::string& ratio, double value,
                    int turns, int samples_per_turn, int circle_samples,
                    const Emit& emit) {
    ShellParams params;
    params.alpha = Angle::from_degrees(alpha_deg);
    params.tube_ratio = ratio_law(ratio, value);
    params.turns = turns;
    params.samples_per_turn = samples_per_turn;
    params.circle_samples = circle_samples;
    const ShellSurface shell = shell_surface(params);
    emit.text(write_off(shell.mesh, emit.precision));
}

// ---- tilings ---------------------------------------------------------

void render_disc_polygon(SvgDocument& svg, const std::vector<DiscPoint>& vertices,
                         const std::string& stroke) {
    const std::size_t n = vertices.size();
    svg.begin_path(vertices[0].vec());
    for (std::size_t e = 0; e < n; ++e) {
        const DiscPoint& va = vertices[e];
        const DiscPoint& vb = vertices[(e + 1) % n];
        const Geodesic g = Geodesic::through(va, vb);
        if (g.is_diameter) {
            svg.path_line_to(vb.vec());
            continue;
        }
        const double a1 = (va.vec() - g.centre).angle();
        double delta = std::remainder((vb.vec() - g.centre).angle() - a1, kTau);
        svg.path_arc_to(ArcSegment{g.centre, g.radius, a1, a1 + delta});
    }
    svg.end_path(stroke, false);
}

void cmd_tiling_classify(int n, int k, const Emit& emit) {
    switch (classify_tiling(n, k)) {
        case TilingClass::spherical: emit.line("spherical"); break;
        case TilingClass::euclidean: emit.line("euclidean"); break;
        case TilingClass::hyperbolic: emit.line("hyperbolic"); break;
    }
}

void cmd_tiling_generate(int n, int k, int depth, const Emit& emit) {
    const Tiling tiling = generate_tiling(n, k, depth);
    SvgDocument svg(-1.05, -1.05, 2.1, 2.1, style_for(emit));
    svg.add_circle_outline({0.0, 0.0}, 1.0, "#000000");
    for (const Tile& tile : tiling.tiles)
        render_disc_polygon(svg, tile.vertices,
                            generation_shade(tile.generation, depth));
    emit.text(svg.to_string());
}

void cmd_tiling_genus(int p, const Emit& emit) {
    const GenusPolygon poly = genus_polygon(p);
    double angle_sum = 0.0;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        angle_sum += interior_angle(poly.vertices[i], poly.vertices[(i + 1) % n],
                                    poly.vertices[(i + n - 1) % n]);
    emit.line("sides " + std::to_string(4 * p));
    emit.line("corner_angle_deg " + emit.real(Angle{angle_sum / n}.degrees()));
    emit.line("angle_sum_deg " + emit.real(Angle{angle_sum}.degrees()));
    emit.line("circumradius " + emit.real(poly.circumradius));
    std::string word = "side_word";
    for (const std::string& s : poly.side_word) word += " " + s;
    emit.line(word);
    if (!emit.output.empty()) {
        SvgDocument svg(-1.05, -1.05, 2.1, 2.1, style_for(emit));
        svg.add_circle_outline({0.0, 0.0}, 1.0, "#000000");
        render_disc_polygon(svg, poly.vertices, "#000000");
        emit.text(svg.to_string());
    }
}

// ---- polyhedra -------------------------------------------------------

void cmd_poly_enumerate(const Emit& emit) {
    Csv csv;
    csv.header = {"name", "p", "q", "V", "E", "F"};
    for (const RegularPolyhedron& r : enumerate_regular()) {
        csv.rows.push_back({r.name, std::to_string(r.symbol.p),
                            std::to_string(r.symbol.q), std::to_string(r.vertices),
                            std::to_string(r.edges), std::to_string(r.faces)});
    }
    emit.text(csv.to_string());
}

std::string report_csv(const PolyhedronReport& r) {
    Csv csv;
    csv.header = {"name", "V", "E", "F", "chi"};
    csv.rows.push_back({r.name, std::to_string(r.vertices), std::to_string(r.edges),
                        std::to_string(r.faces), std::to_string(r.euler)});
    return csv.to_string();
}

void cmd_poly_build(int p, int q, bool as_report, const Emit& emit) {
    const Mesh mesh = build_platonic({p, q});
    if (as_report) {
        std::string name = "{" + std::to_string(p) + "," + std::to_string(q) + "}";
        for (const RegularPolyhedron& r : enumerate_regular())
            if (r.symbol.p == p && r.symbol.q == q) name = r.name;
        emit.text(report_csv(report(name, mesh)));
    } else {
        emit.text(write_off(mesh, emit.precision));
    }
}

void cmd_poly_cuboct(const std::string& from, bool as_report, const Emit& emit) {
    const Mesh mesh =
        from == "octahedron" ? cuboctahedron_from_octahedron() : cuboctahedron_from_cube();
    if (as_report)
        emit.text(report_csv(report("cuboctahedron", mesh)));
    else
        emit.text(write_off(mesh, emit.precision));
}

// ---- topology --------------------------------------------------------

Vec3 parse_axis(const std::string& name) {
    if (name == "x") return {1.0, 0.0, 0.0};
    if (name == "y") return {0.0, 1.0, 0.0};
    return {0.0, 0.0, 1.0};
}

void cmd_belt(int twists, const std::string& axis, const Emit& emit) {
    const RotationPath path = full_twists(twists, parse_axis(axis));
    const int endpoint = lift_path(path);
    emit.line(endpoint > 0 ? "+1" : "-1");
    if (!emit.output.empty()) {
        Csv csv;
        csv.header = {"t", "w", "x", "y", "z"};
        for (const auto& row : lift_trace(path)) {
            csv.rows.push_back({emit.real(row[0]), emit.real(row[1]),
                                emit.real(row[2]), emit.real(row[3]),
                                emit.real(row[4])});
        }
        emit.text(csv.to_string());
    }
}

std::vector<PLCurve> demo_link(const std::string& name) {
    if (name == "borromean") {
        const auto rings = borromean_rings();
        return {rings[0], rings[1], rings[2]};
    }
    PLCurve a, b;
    const int steps = 96;
    for (int i = 0; i < steps; ++i) {
        const double t = kTau * i / steps;
        a.points.push_back({std::cos(t), std::sin(t), 0.0});
        if (name == "hopf")
            b.points.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
        else  // split: far-apart circles
            b.points.push_back({10.0 + std::cos(t), std::sin(t), 0.0});
    }
    return {a, b};
}

void cmd_link(const std::string& demo, const std::string& points_csv,
              const std::string& rings_off, const Emit& emit) {
    const std::vector<PLCurve> curves = demo_link(demo);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            const int by_crossings = linking_number(curves[i], curves[j]);
            const int by_gauss = linking_number_gauss(curves[i], curves[j]);
            emit.line("pair " + std::to_string(i) + " " + std::to_string(j) +
                      " crossing " + std::to_string(by_crossings) + " gauss " +
                      std::to_string(by_gauss));
        }
    }
    if (!points_csv.empty()) {
        Csv csv;
        csv.header = {"curve", "index", "x", "y", "z"};
        for (std::size_t i = 0; i < curves.size(); ++i) {
            for (std::size_t j = 0; j < curves[i].size(); ++j) {
                const Vec3 p = curves[i].points[j];
                csv.rows.push_back({std::to_string(i), std::to_string(j),
                                    emit.real(p.x), emit.real(p.y), emit.real(p.z)});
            }
        }
        write_text_file(points_csv, csv.to_string(), emit.force);
    }
    if (!rings_off.empty()) {
        std::vector<std::vector<Vec3>> loops;
        for (const PLCurve& c : curves) loops.push_back(c.points);
        write_text_file(rings_off, write_off_polylines(loops, emit.precision),
                        emit.force);
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"wonderkit: computable curiosities from plane, space and the hyperbolic disc"};
    app.require_subcommand(1);

    Emit emit;
    emit.precision = env_precision(12);
    app.add_flag("--force", emit.force, "overwrite existing output files");
    app.add_option("--precision", emit.precision,
                   "significant digits for numeric output")
        ->check(CLI::Range(1, 17));

    // series
    auto* series = app.add_subcommand("series", "harmonic series machinery");
    series->require_subcommand(1);
    std::int64_t terms = 1;
    auto* harmonic = series->add_subcommand("harmonic", "partial sum of 1/n");
    harmonic->add_option("-N,--terms", terms, "number of terms")->required();
    harmonic->callback([&] { cmd_series_harmonic(terms, emit); });

    auto* alternating =
        series->add_subcommand("alternating", "partial sum of (-1)^(n-1)/n");
    alternating->add_option("-N,--terms", terms, "number of terms")->required();
    alternating->callback([&] { cmd_series_alternating(terms, emit); });

    double target = 0.0;
    std::uint64_t max_terms = 0;
    double tol = 0.0;
    auto* rearr = series->add_subcommand(
        "rearrange", "greedy rearrangement towards a target sum (CSV trace)");
    rearr->add_option("-S,--target", target, "target sum")->required();
    auto* mt = rearr->add_option("--max-terms", max_terms, "term budget");
    rearr->add_option("--tol", tol, "stop once the crossing bound drops this low")
        ->excludes(mt);
    rearr->add_option("-o,--output", emit.output, "write CSV here instead of stdout");
    rearr->callback([&] {
        if (max_terms == 0 && tol <= 0.0)
            throw CLI::ValidationError("rearrange", "need --max-terms or --tol");
        cmd_series_rearrange(target, max_terms, tol, emit);
    });

    // width
    auto* width_cmd = app.add_subcommand("width", "constant-width bodies");
    width_cmd->require_subcommand(1);
    int order = 3;
    double body_width = 1.0;
    int directions = 3600;
    auto* reuleaux_cmd =
        width_cmd->add_subcommand("reuleaux", "odd Reuleaux polygon width sweep");
    reuleaux_cmd->add_option("-n,--order", order, "number of arcs (odd)")->required();
    reuleaux_cmd->add_option("-w,--width", body_width, "target width");
    reuleaux_cmd->add_option("--directions", directions, "sampled directions");
    reuleaux_cmd->add_option("-o,--output", emit.output, "also write an SVG outline");
    reuleaux_cmd->callback(
        [&] { cmd_width_reuleaux(order, body_width, directions, emit); });

    // rope
    auto* rope = app.add_subcommand(
        "rope", "extra rope needed to raise a loop around a sphere");
    std::optional<double> rope_height, rope_extra_in;
    double radius_ignored = 0.0;
    auto* h_opt = rope->add_option("--height", rope_height, "uniform gap height");
    rope->add_option("--extra", rope_extra_in, "extra circumference")
        ->excludes(h_opt);
    rope->add_option("--radius", radius_ignored,
                     "sphere radius (the answer does not depend on it)");
    rope->callback([&] {
        if (!rope_height && !rope_extra_in)
            throw CLI::ValidationError("rope", "need --height or --extra");
        cmd_rope(rope_height, rope_extra_in, emit);
    });

    // spiral
    auto* spiral = app.add_subcommand("spiral", "spiral SVG");
    std::string spiral_type = "archimedean";
    double sp_a = 1.0, sp_b = 0.2, sp_turns = 3.0;
    int sp_samples = 512;
    spiral->add_option("--type", spiral_type, "archimedean | logarithmic")
        ->check(CLI::IsMember({"archimedean", "logarithmic"}));
    spiral->add_option("-a", sp_a, "base radius / scale");
    spiral->add_option("-b", sp_b, "growth rate");
    spiral->add_option("--turns", sp_turns, "number of turns");
    spiral->add_option("--samples", sp_samples, "polyline samples");
    spiral->add_option("-o,--output", emit.output, "output SVG path");
    spiral->callback(
        [&] { cmd_spiral(spiral_type, sp_a, sp_b, sp_turns, sp_samples, emit); });

    // web
    auto* web = app.add_subcommand("web", "spider web layout SVG");
    int web_radials = 12, web_rings = 8;
    double web_radius = 1.0, web_angle = 80.0;
    web->add_option("-m,--radials", web_radials, "number of radial threads");
    web->add_option("--rings", web_rings, "capture spiral turns");
    web->add_option("--frame-radius", web_radius, "frame circumradius");
    web->add_option("--scaffold-angle", web_angle,
                    "scaffold crossing angle (degrees)");
    web->add_option("-o,--output", emit.output, "output SVG path");
    web->callback(
        [&] { cmd_web(web_radials, web_rings, web_radius, web_angle, emit); });

    // helix
    auto* helix = app.add_subcommand("helix", "helix projections");
    helix->require_subcommand(1);
    auto* project = helix->add_subcommand(
        "project", "view up the axis: central projection onto z = d");
    double hx_r = 1.0, hx_c = 1.0, hx_d = 1.0, hx_t0 = 1.0,
           hx_t1 = 8.0 * std::numbers::pi;
    int hx_samples = 512;
    bool hx_left = false;
    std::string hx_profile;
    project->add_option("-R,--radius", hx_r, "cylinder radius");
    project->add_option("-c,--pitch", hx_c, "pitch rate (height per radian)");
    project->add_option("-d,--plane", hx_d, "image plane height");
    project->add_option("--t0", hx_t0, "parameter start");
    project->add_option("--t1", hx_t1, "parameter end");
    project->add_option("--samples", hx_samples, "polyline samples");
    project->add_flag("--left", hx_left, "left-handed helix");
    project->add_option("--profile-csv", hx_profile,
                        "dump the measured tangent-radial angle profile");
    project->add_option("-o,--output", emit.output, "output SVG path");
    project->callback([&] {
        cmd_helix_project(hx_r, hx_c, hx_d, hx_t0, hx_t1, hx_samples, hx_left,
                          hx_profile, emit);
    });

    // shell
    auto* shell = app.add_subcommand("shell", "whorl-touching shell problems");
    shell->require_subcommand(1);
    std::string ratio = "curvature";
    double ratio_value = 0.5;
    auto* solve = shell->add_subcommand(
        "solve", "find the spiral angle where consecutive whorls touch");
    solve->add_option("--ratio", ratio, "tube ratio law: curvature | sine | const")
        ->check(CLI::IsMember({"curvature", "sine", "const"}));
    solve->add_option("--value", ratio_value, "constant for --ratio const");
    solve->callback([&] { cmd_shell_solve(ratio, ratio_value, emit); });

    auto* mesh_cmd = shell->add_subcommand("mesh", "swept shell surface as OFF");
    double alpha_deg = 80.0;
    int turns = 3, spt = 64, cs = 24;
    mesh_cmd->add_option("--alpha-deg", alpha_deg, "spiral angle in degrees")
        ->required();
    mesh_cmd->add_option("--ratio", ratio, "tube ratio law");
    mesh_cmd->add_option("--value", ratio_value, "constant for --ratio const");
    mesh_cmd->add_option("--turns", turns, "whorl count");
    mesh_cmd->add_option("--samples-per-turn", spt, "rings per turn");
    mesh_cmd->add_option("--circle-samples", cs, "vertices per ring");
    mesh_cmd->add_option("-o,--output", emit.output, "output OFF path");
    mesh_cmd->callback(
        [&] { cmd_shell_mesh(alpha_deg, ratio, ratio_value, turns, spt, cs, emit); });

    // tiling
    auto* tiling = app.add_subcommand("tiling", "disc-model tilings");
    tiling->require_subcommand(1);
    int tl_n = 7, tl_k = 3, tl_depth = 2, genus_p = 2;
    auto* classify = tiling->add_subcommand("classify", "geometry of {n,k}");
    classify->add_option("-n", tl_n, "polygon size")->required();
    classify->add_option("-k", tl_k, "polygons per vertex")->required();
    classify->callback([&] { cmd_tiling_classify(tl_n, tl_k, emit); });

    auto* generate = tiling->add_subcommand("generate", "reflect {n,k} into the disc");
    generate->add_option("-n", tl_n, "polygon size")->required();
    generate->add_option("-k", tl_k, "polygons per vertex")->required();
    generate->add_option("--depth", tl_depth, "reflection generations");
    generate->add_option("-o,--output", emit.output, "output SVG path");
    generate->callback([&] { cmd_tiling_generate(tl_n, tl_k, tl_depth, emit); });

    auto* genus = tiling->add_subcommand("genus", "regular 4p-gon for genus p");
    genus->add_option("-p,--genus", genus_p, "genus (>= 2)")->required();
    genus->add_option("-o,--output", emit.output, "also write an SVG");
    genus->callback([&] { cmd_tiling_genus(genus_p, emit); });

    // poly
    auto* poly = app.add_subcommand("poly", "regular polyhedra");
    poly->require_subcommand(1);
    auto* enumerate = poly->add_subcommand("enumerate", "the five regular solids, CSV");
    enumerate->add_option("-o,--output", emit.output, "output CSV path");
    enumerate->callback([&] { cmd_poly_enumerate(emit); });

    int sp = 4, sq = 3;
    bool as_report = false;
    auto* build = poly->add_subcommand("build", "unit-edge mesh as OFF");
    build->add_option("-p", sp, "face size")->required();
    build->add_option("-q", sq, "faces per vertex")->required();
    build->add_flag("--report", as_report, "emit a CSV report instead of OFF");
    build->add_option("-o,--output", emit.output, "output path");
    build->callback([&] { cmd_poly_build(sp, sq, as_report, emit); });

    std::string cuboct_from = "cube";
    auto* cuboct = poly->add_subcommand("cuboct", "cuboctahedron by midpoint truncation");
    cuboct->add_option("--from", cuboct_from, "cube | octahedron")
        ->check(CLI::IsMember({"cube", "octahedron"}));
    cuboct->add_flag("--report", as_report, "emit a CSV report instead of OFF");
    cuboct->add_option("-o,--output", emit.output, "output path");
    cuboct->callback([&] { cmd_poly_cuboct(cuboct_from, as_report, emit); });

    // belt
    auto* belt = app.add_subcommand(
        "belt", "lift a twist loop to the rotation double cover");
    int twists = 1;
    std::string axis = "z";
    belt->add_option("-n,--twists", twists, "number of full twists")->required();
    belt->add_option("--axis", axis, "twist axis")
        ->check(CLI::IsMember({"x", "y", "z"}));
    belt->add_option("-o,--output", emit.output, "write the lift trace CSV here");
    belt->callback([&] { cmd_belt(twists, axis, emit); });

    // link
    auto* link = app.add_subcommand("link", "linking numbers of demo links");
    std::string demo = "borromean";
    std::string points_csv;
    std::string rings_off;
    link->add_option("--demo", demo, "borromean | hopf | split")
        ->check(CLI::IsMember({"borromean", "hopf", "split"}));
    link->add_option("--points-csv", points_csv, "also dump curve points as CSV");
    link->add_option("--rings-off", rings_off, "also dump the curves as OFF polylines");
    link->callback([&] { cmd_link(demo, points_csv, rings_off, emit); });

    // yinyang
    auto* yy = app.add_subcommand("yinyang", "dividing curve SVG");
    double yy_radius = 1.0;
    yy->add_option("-R,--radius", yy_radius, "outer radius");
    yy->add_option("-o,--output", emit.output, "output SVG path");
    yy->callback([&] { cmd_yinyang(yy_radius, emit); });

    // Let --force/--precision appear after the subcommand as well.
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (CLI::App* sub : node->get_subcommands(nullptr)) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace wonderkit
