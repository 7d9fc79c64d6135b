#include "crossline/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace crossline {

namespace {

double to_double(const Scalar& s) {
    return s.rational().convert_to<double>();
}

struct Box {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;

    void grow(double x, double y) {
        min_x = std::min(min_x, x);
        min_y = std::min(min_y, y);
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    }
};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Clip the parametric line p + t*d to the world box; returns the segment
// endpoints in world coordinates.
bool clip_line(double px, double py, double dx, double dy, const Box& b, double seg[4]) {
    double t_min = -1e18, t_max = 1e18;
    auto narrow = [&](double d, double lo, double hi, double p) {
        if (d == 0.0) return p >= lo && p <= hi;
        double t0 = (lo - p) / d, t1 = (hi - p) / d;
        if (t0 > t1) std::swap(t0, t1);
        t_min = std::max(t_min, t0);
        t_max = std::min(t_max, t1);
        return true;
    };
    if (!narrow(dx, b.min_x, b.max_x, px)) return false;
    if (!narrow(dy, b.min_y, b.max_y, py)) return false;
    if (t_min > t_max) return false;
    seg[0] = px + t_min * dx;
    seg[1] = py + t_min * dy;
    seg[2] = px + t_max * dx;
    seg[3] = py + t_max * dy;
    return true;
}

} // namespace

std::string trace_to_svg(const ConstructionTrace& trace) {
    if (trace.field() != FieldTag::Rational)
        throw UnsupportedFieldError("SVG rendering");

    Box world;
    bool first = true;
    for (const auto& s : trace.steps) {
        if (!s.is_point()) continue;
        double x = to_double(s.point().x), y = to_double(s.point().y);
        if (first) {
            world = Box{x, y, x, y};
            first = false;
        } else {
            world.grow(x, y);
        }
    }
    double span_x = std::max(world.max_x - world.min_x, 1.0);
    double span_y = std::max(world.max_y - world.min_y, 1.0);
    world.min_x -= 0.25 * span_x;
    world.max_x += 0.25 * span_x;
    world.min_y -= 0.25 * span_y;
    world.max_y += 0.25 * span_y;
    span_x = world.max_x - world.min_x;
    span_y = world.max_y - world.min_y;

    const double width = 640.0;
    const double height = std::max(240.0, width * span_y / span_x);
    const double scale = std::min(width / span_x, height / span_y);
    auto sx = [&](double x) { return (x - world.min_x) * scale; };
    auto sy = [&](double y) { return height - (y - world.min_y) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
        << num(width) << " " << num(height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Lines: the frame base solid, every other construction line dashed.
    for (const auto& s : trace.steps) {
        if (s.is_point()) continue;
        const PlaneLine& l = s.line();
        double seg[4];
        if (!clip_line(to_double(l.base.x), to_double(l.base.y), to_double(l.dir.dx),
                       to_double(l.dir.dy), world, seg))
            continue;
        bool base = s.id == "base";
        out << "  <line class=\"" << (base ? "base" : "aux") << "\" x1=\"" << num(sx(seg[0]))
            << "\" y1=\"" << num(sy(seg[1])) << "\" x2=\"" << num(sx(seg[2])) << "\" y2=\""
            << num(sy(seg[3])) << "\" stroke=\"" << (base ? "#222222" : "#888888")
            << "\" stroke-width=\"" << (base ? "1.5" : "1.0")
            << (base ? "\"" : "\" stroke-dasharray=\"6 4\"") << "/>\n";
    }

    // Frame points O, I as ticks; every other point a labeled marker.
    for (const auto& s : trace.steps) {
        if (!s.is_point()) continue;
        double x = sx(to_double(s.point().x));
        double y = sy(to_double(s.point().y));
        if (s.rule == "frame") {
            out << "  <line class=\"tick\" x1=\"" << num(x) << "\" y1=\"" << num(y - 5)
                << "\" x2=\"" << num(x) << "\" y2=\"" << num(y + 5)
                << "\" stroke=\"#222222\" stroke-width=\"1.0\"/>\n";
            out << "  <text x=\"" << num(x + 4) << "\" y=\"" << num(y + 16)
                << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.id << "</text>\n";
        } else {
            out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y)
                << "\" r=\"3\" fill=\"#bb3333\"/>\n";
            out << "  <text x=\"" << num(x + 5) << "\" y=\"" << num(y - 5)
                << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.id << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg(const ConstructionTrace& trace, std::ostream& out) {
    out << trace_to_svg(trace);
}

void emit_svg_file(const ConstructionTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path);
    out << trace_to_svg(trace);
}

} // namespace crossline
