#include "affinv/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace affinv {

namespace {

constexpr double kCanvas = 800.0;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

const char* const kStrokes[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

}  // namespace

std::string render_svg(const std::vector<ConvexBody>& bodies, const std::vector<Point>& points) {
    double lo_x = 0.0, lo_y = 0.0, hi_x = 1.0, hi_y = 1.0;
    bool first = true;
    auto grow = [&](const Vec& p) {
        if (first) {
            lo_x = hi_x = p[0];
            lo_y = hi_y = p[1];
            first = false;
        } else {
            lo_x = std::min(lo_x, p[0]);
            hi_x = std::max(hi_x, p[0]);
            lo_y = std::min(lo_y, p[1]);
            hi_y = std::max(hi_y, p[1]);
        }
    };
    for (const auto& b : bodies) {
        if (b.dim() != 2) throw UnsupportedDimension("render_svg: only n = 2 is supported");
        for (const auto& v : b.vertices()) grow(v);
    }
    for (const auto& p : points) {
        if (p.size() != 2) throw UnsupportedDimension("render_svg: only n = 2 is supported");
        grow(p);
    }

    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double pad = 0.05 * span;
    lo_x -= pad;
    lo_y -= pad;
    const double scale = kCanvas / (span + 2.0 * pad);
    auto sx = [&](double x) { return (x - lo_x) * scale; };
    auto sy = [&](double y) { return kCanvas - (y - lo_y) * scale; };  // y up

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kCanvas) << "\" height=\""
        << fmt(kCanvas) << "\" viewBox=\"0 0 " << fmt(kCanvas) << " " << fmt(kCanvas) << "\">\n";
    for (size_t i = 0; i < bodies.size(); ++i) {
        out << "  <polygon points=\"";
        const auto& verts = bodies[i].vertices();
        for (size_t k = 0; k < verts.size(); ++k) {
            if (k) out << ' ';
            out << fmt(sx(verts[k][0])) << ',' << fmt(sy(verts[k][1]));
        }
        out << "\" fill=\"none\" stroke=\"" << kStrokes[i % std::size(kStrokes)]
            << "\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& p : points) {
        out << "  <circle cx=\"" << fmt(sx(p[0])) << "\" cy=\"" << fmt(sy(p[1]))
            << "\" r=\"2\" fill=\"#000000\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg(const std::vector<ConvexBody>& bodies, const std::vector<Point>& points,
              const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_svg: cannot open " + path);
    out << render_svg(bodies, points);
    if (!out) throw IoError("emit_svg: write failed for " + path);
}

}  // namespace affinv
