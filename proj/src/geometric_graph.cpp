#include "geocycle/geometric_graph.hpp"

#include <algorithm>
#include <numeric>

#include "geocycle/errors.hpp"

namespace geocycle {

GeometricGraph::GeometricGraph(AbstractGraph graph, std::vector<Point> coords)
    : graph_(std::move(graph)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != graph_.vertex_count())
        throw InputError("coordinate count does not match vertex count");
    auto report = validate_general_position(coords_, graph_.edges());
    if (!report.ok()) {
        std::string msg = report.violations.front().describe();
        if (report.violations.size() > 1)
            msg += " (+" + std::to_string(report.violations.size() - 1) + " more)";
        throw GeneralPositionError(msg);
    }
    for (int e = 0; e < edge_count(); ++e) {
        for (int f = e + 1; f < edge_count(); ++f) {
            if (segments_cross(segment(e), segment(f)))
                crossings_.insert({e, f});
        }
    }
}

Segment GeometricGraph::segment(int e) const {
    const auto& [u, v] = graph_.edge(e);
    return Segment{coords_[u], coords_[v]};
}

bool GeometricGraph::edges_cross(int e, int f) const {
    if (e > f) std::swap(e, f);
    return crossings_.count({e, f}) > 0;
}

std::vector<int> GeometricGraph::crossing_edges() const {
    std::vector<bool> seen(edge_count(), false);
    for (const auto& [e, f] : crossings_) seen[e] = seen[f] = true;
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (seen[e]) out.push_back(e);
    return out;
}

CrossingSet crossing_set(const GeometricGraph& g) {
    CrossingSet out;
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f)
            if (segments_cross(g.segment(e), g.segment(f))) out.insert({e, f});
    return out;
}

AbstractGraph edge_crossing_graph(const GeometricGraph& g) {
    AbstractGraph ex;
    for (int e = 0; e < g.edge_count(); ++e) ex.add_vertex(g.graph().edge_name(e));
    for (const auto& [e, f] : g.crossings()) ex.add_edge(e, f);
    return ex;
}

CrossingSubgraph crossing_subgraph(const GeometricGraph& g) {
    std::vector<int> edge_origin = g.crossing_edges();
    std::vector<int> vertex_origin;
    {
        std::set<int> vs;
        for (int e : edge_origin) {
            vs.insert(g.graph().edge(e).first);
            vs.insert(g.graph().edge(e).second);
        }
        vertex_origin.assign(vs.begin(), vs.end());
    }
    // original vertex order is preserved, so edge names match the source
    std::vector<int> vertex_new(g.vertex_count(), -1);
    AbstractGraph sub;
    std::vector<Point> coords;
    for (int v : vertex_origin) {
        vertex_new[v] = sub.add_vertex(g.graph().vertex_id(v));
        coords.push_back(g.coord(v));
    }
    for (int e : edge_origin) {
        const auto& [u, v] = g.graph().edge(e);
        sub.add_edge(vertex_new[u], vertex_new[v]);
    }
    return CrossingSubgraph{GeometricGraph(std::move(sub), std::move(coords)),
                            std::move(vertex_origin), std::move(edge_origin)};
}

int CrossingComponents::component_of_edge(int e) const {
    return edge_component_[e];
}

CrossingComponents crossing_component_graph(const GeometricGraph& g) {
    CrossingComponents out;
    out.edge_component_.assign(g.edge_count(), -1);
    std::vector<int> ce = g.crossing_edges();

    // union-find over crossing edges, merged through shared vertices
    std::vector<int> parent(g.edge_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<int> edge_at_vertex(g.vertex_count(), -1);
    for (int e : ce) {
        for (int v : {g.graph().edge(e).first, g.graph().edge(e).second}) {
            if (edge_at_vertex[v] == -1)
                edge_at_vertex[v] = e;
            else
                parent[find(edge_at_vertex[v])] = find(e);
        }
    }

    for (int e : ce) {
        int root = find(e);
        if (out.edge_component_[root] == -1) {
            out.edge_component_[root] = static_cast<int>(out.components.size());
            out.components.emplace_back();
        }
        int c = out.edge_component_[root];
        out.edge_component_[e] = c;
        out.components[c].edges.push_back(e);
    }
    for (auto& comp : out.components) {
        std::sort(comp.edges.begin(), comp.edges.end());
        std::set<int> vs;
        for (int e : comp.edges) {
            vs.insert(g.graph().edge(e).first);
            vs.insert(g.graph().edge(e).second);
        }
        comp.vertices.assign(vs.begin(), vs.end());
    }

    for (std::size_t c = 0; c < out.components.size(); ++c)
        out.graph.add_vertex("X" + std::to_string(c));
    for (const auto& [e, f] : g.crossings()) {
        int ce1 = out.edge_component_[e];
        int ce2 = out.edge_component_[f];
        if (ce1 == ce2)
            out.components[ce1].internal_crossing = true;
        else if (!out.graph.has_edge(ce1, ce2))
            out.graph.add_edge(ce1, ce2);
    }
    return out;
}

std::set<std::pair<int, int>> co_crossing_pairs(const GeometricGraph& g) {
    std::set<std::pair<int, int>> out;
    for (const auto& [e, f] : g.crossings()) {
        for (int u : {g.graph().edge(e).first, g.graph().edge(e).second}) {
            for (int v : {g.graph().edge(f).first, g.graph().edge(f).second}) {
                if (u == v) continue;
                out.insert({std::min(u, v), std::max(u, v)});
            }
        }
    }
    return out;
}

} // namespace geocycle
