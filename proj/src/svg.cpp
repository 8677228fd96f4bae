#include "geocycle/svg.hpp"

#include <algorithm>
#include <sstream>

namespace geocycle {

// Floating point is fine here: coordinates only position the picture.
std::string render_svg(const GeometricGraph& g, const SvgOptions& options) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (g.vertex_count() > 0) {
        minx = miny = 1e300;
        maxx = maxy = -1e300;
        for (const auto& p : g.coords()) {
            minx = std::min(minx, p.x.get_d());
            maxx = std::max(maxx, p.x.get_d());
            miny = std::min(miny, p.y.get_d());
            maxy = std::max(maxy, p.y.get_d());
        }
    }
    double span = std::max({maxx - minx, maxy - miny, 1e-9});
    double margin = 0.08 * options.size;
    double scale = (options.size - 2 * margin) / span;
    auto sx = [&](const Point& p) { return margin + (p.x.get_d() - minx) * scale; };
    // flip y so the drawing reads the usual way up
    auto sy = [&](const Point& p) { return options.size - margin - (p.y.get_d() - miny) * scale; };

    std::vector<bool> crossing_edge(g.edge_count(), false);
    for (const auto& [e, f] : g.crossings()) crossing_edge[e] = crossing_edge[f] = true;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size
        << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size << " "
        << options.size << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.graph().edge(e);
        out << "  <line x1=\"" << sx(g.coord(u)) << "\" y1=\"" << sy(g.coord(u))
            << "\" x2=\"" << sx(g.coord(v)) << "\" y2=\"" << sy(g.coord(v)) << "\" stroke=\""
            << (crossing_edge[e] ? "#c0392b" : "#2c3e50") << "\" stroke-width=\""
            << (crossing_edge[e] ? 2.4 : 1.6) << "\"/>\n";
    }
    for (const auto& [e, f] : g.crossings()) {
        Point p = crossing_point(g.segment(e), g.segment(f));
        out << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(p)
            << "\" r=\"3.2\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.2\"/>\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        double x = sx(g.coord(v)), y = sy(g.coord(v));
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4.5\" fill=\"#2c3e50\"/>\n";
        out << "  <text x=\"" << x + 7 << "\" y=\"" << y - 7
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << g.graph().vertex_id(v);
        out << "</text>\n";
        if (options.overlay && v < static_cast<int>(options.overlay->size())) {
            out << "  <text x=\"" << x + 7 << "\" y=\"" << y + 16
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#2980b9\">&#8594; "
                << (*options.overlay)[v] << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace geocycle
