#include "opsr/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "opsr/pathfind.hpp"

namespace opsr {
namespace {

constexpr double kScale = 10.0;  // px per meter
constexpr double kMargin = 40.0;
constexpr double kStallW = 2.4 * kScale;
constexpr double kStallD = 5.3 * kScale;

struct Mapper {
    double min_x, max_y;
    double px(double x) const { return kMargin + (x - min_x) * kScale; }
    // SVG y grows downward; flip so the lot keeps its orientation.
    double py(double y) const { return kMargin + (max_y - y) * kScale; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

void polyline(std::ostringstream& out, const Mapper& m, const LotGraph& g, const Path& path,
              const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"3\" stroke-dasharray=\"6,4\" points=\"";
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        const Node& n = g.node(path.nodes[i]);
        if (i > 0) out << ' ';
        out << fmt(m.px(n.x)) << ',' << fmt(m.py(n.y));
    }
    out << "\"/>\n";
}

}  // namespace

std::string render_svg(const LotGraph& graph, const OccupancyState& state,
                       const std::optional<Recommendation>& rec,
                       const std::string& entrance, std::span<const std::string> exits) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x, max_x = -min_x, max_y = -min_x;
    for (const Node& n : graph.nodes()) {
        min_x = std::min(min_x, n.x);
        min_y = std::min(min_y, n.y);
        max_x = std::max(max_x, n.x);
        max_y = std::max(max_y, n.y);
    }
    const Mapper m{min_x, max_y};
    const double width = (max_x - min_x) * kScale + 2 * kMargin;
    const double height = (max_y - min_y) * kScale + 2 * kMargin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\">\n";

    for (const Edge& e : graph.edges()) {
        const Node& a = graph.node(e.a);
        const Node& b = graph.node(e.b);
        out << "  <line x1=\"" << fmt(m.px(a.x)) << "\" y1=\"" << fmt(m.py(a.y)) << "\" x2=\""
            << fmt(m.px(b.x)) << "\" y2=\"" << fmt(m.py(b.y))
            << "\" stroke=\"#bbbbbb\" stroke-width=\"2\"/>\n";
    }

    if (rec.has_value()) {
        polyline(out, m, graph, astar(graph, entrance, rec->space), "#1f77b4");
        double best = std::numeric_limits<double>::infinity();
        Path walk;
        for (const auto& exit_id : exits) {
            Path p = astar(graph, rec->space, exit_id);
            if (p.length < best) {
                best = p.length;
                walk = std::move(p);
            }
        }
        polyline(out, m, graph, walk, "#2ca02c");
    }

    for (const auto& space : graph.spaces()) {
        const Node& n = graph.node(space);
        const bool occ = state.is_occupied(space);
        const bool chosen = rec.has_value() && rec->space == space;
        out << "  <rect class=\"space\" x=\"" << fmt(m.px(n.x) - kStallW / 2) << "\" y=\""
            << fmt(m.py(n.y) - kStallD / 2) << "\" width=\"" << fmt(kStallW) << "\" height=\""
            << fmt(kStallD) << "\" fill=\"" << (occ ? "#888888" : "none") << "\" stroke=\""
            << (chosen ? "#d62728" : "#333333") << "\" stroke-width=\"" << (chosen ? 3 : 1)
            << "\"/>\n";
        out << "  <text x=\"" << fmt(m.px(n.x)) << "\" y=\"" << fmt(m.py(n.y))
            << "\" font-size=\"10\" text-anchor=\"middle\">" << space << "</text>\n";
    }

    for (const Node& n : graph.nodes()) {
        if (n.kind != NodeKind::Entrance && n.kind != NodeKind::Exit) continue;
        out << "  <circle cx=\"" << fmt(m.px(n.x)) << "\" cy=\"" << fmt(m.py(n.y))
            << "\" r=\"6\" fill=\""
            << (n.kind == NodeKind::Entrance ? "#1f77b4" : "#2ca02c") << "\"/>\n";
        out << "  <text x=\"" << fmt(m.px(n.x) + 9) << "\" y=\"" << fmt(m.py(n.y))
            << "\" font-size=\"11\">" << n.id << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace opsr
